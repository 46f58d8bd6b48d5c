# Descriptor files
