"""
Performance tests for qeulerian.
"""
