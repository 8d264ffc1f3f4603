# Validators package: JSON schema checks for input files
