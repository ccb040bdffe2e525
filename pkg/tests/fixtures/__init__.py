"""
Fixtures for the KvN lab tests.

This module contains shared fixtures and utilities used across the test suite.
"""
