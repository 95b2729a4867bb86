"""
Top level package for CLI tests

- Unit tests
- Integration tests
- End-to-end tests
"""
