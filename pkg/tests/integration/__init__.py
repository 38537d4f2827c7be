"""
Integration tests for qeulerian.
"""
