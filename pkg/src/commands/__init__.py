"""Commands package for the Cayley forms CLI."""
