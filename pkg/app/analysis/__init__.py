"""Verification harnesses and asymptotic estimates over censuses and avoider series."""
