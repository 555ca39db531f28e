"""Exact algebraic combinatorics toolkit."""
