"""Independent brute-force realizations used to validate the combinatorial rules."""
