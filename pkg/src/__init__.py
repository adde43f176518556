"""
Source package for the Cayley forms toolkit.
"""
