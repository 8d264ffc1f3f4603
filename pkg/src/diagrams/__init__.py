# Diagrams package
