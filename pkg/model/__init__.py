"""
Model components for the KvN lab.

This package provides the exact operator algebra, the phase-space engine, the
quantum-embedding lab, run settings and scenario handling.
"""
