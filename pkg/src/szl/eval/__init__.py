"""Golden-example verification suite, harness and report writers."""
