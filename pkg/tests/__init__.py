"""Test suite for ffdistlab."""
