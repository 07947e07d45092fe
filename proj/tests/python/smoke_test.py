import _klcy
print("ok", _klcy.__version__)
