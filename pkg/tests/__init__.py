"""
Tests for qeulerian.
"""

