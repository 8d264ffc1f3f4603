# Loaders package
