"""
Unit tests for qeulerian.
"""
