__version__ = '1.0.0'

# first line of every report the tool prints
REPORT_HEADER = '# decomp-forge v1'
