"""
Tests for matrix_lab
"""
