"""
Test package for the refined descent statistics toolkit.

This package contains unit tests for the permutation statistics, the four
ways of computing their distributions, the identity checks, the bijections
and the command-line surface.
"""
