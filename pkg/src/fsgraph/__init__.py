"""Friends-and-strangers graphs."""
