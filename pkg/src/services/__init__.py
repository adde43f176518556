"""Services package for the Cayley forms toolkit."""
