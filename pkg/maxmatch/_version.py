"""Version number."""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version(__package__)
except PackageNotFoundError:  # source tree without an installed distribution
    __version__ = "0.0.0.dev0"
