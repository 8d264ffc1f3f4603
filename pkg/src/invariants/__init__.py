# Invariants package
