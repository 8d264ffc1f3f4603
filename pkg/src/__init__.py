# Shadow module invariants package
