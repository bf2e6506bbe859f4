"""Compute real forms of differential Galois groups exactly

The app config in `realpv.apps` is picked up automatically.
"""
