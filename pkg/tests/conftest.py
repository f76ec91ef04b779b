import pytest

from avgcut import build_tree

from .helpers import figure_edge_rows, figure_edgelist_text


@pytest.fixture(scope="session")
def figure_tree():
    """The 40-node golden tree (27 leaves, 12 internal edges)."""
    return build_tree(figure_edge_rows())


@pytest.fixture(scope="session")
def figure_text():
    return figure_edgelist_text()


@pytest.fixture
def figure_file(tmp_path, figure_text):
    path = tmp_path / "figure.edges"
    path.write_text(figure_text)
    return path
