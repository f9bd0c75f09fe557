"""Finite resource theories, their orderings, and the monotones built
   from them.
"""
