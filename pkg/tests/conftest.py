"""Shared test configuration."""

from hypothesis import settings

# Exact rational arithmetic makes individual examples slow but never flaky;
# the wall-clock deadline is the only hypothesis default that misfires here.
settings.register_profile("exact", deadline=None, max_examples=60)
settings.load_profile("exact")
