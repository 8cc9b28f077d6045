"""
Tests for pcm-sparsify.
"""
