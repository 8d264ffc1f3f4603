# Algebra package
