"""Core infrastructure: settings, exceptions, caching."""
