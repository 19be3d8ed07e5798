"""Shipped example presentation files."""

from importlib import resources


def fixture_path(name: str) -> str:
    """Filesystem path of a shipped .quiv fixture, e.g. fixture_path("ex1.quiv")."""
    ref = resources.files(__name__).joinpath(name)
    with resources.as_file(ref) as p:
        return str(p)


def fixture_text(name: str) -> str:
    return resources.files(__name__).joinpath(name).read_text()
