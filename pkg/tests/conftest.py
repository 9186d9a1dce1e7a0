"""Shared pytest configuration; corpus helpers live in corpus.py."""
