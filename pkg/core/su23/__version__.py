SU23_VERSION = '0.1.0'
