"""The verify-paper acceptance pipeline, one stage group per module."""
