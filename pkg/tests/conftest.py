"""Test configuration for f-edge-color."""

import logging

import pytest

from f_edge_color.core.generators import gen_family, graph_w
from f_edge_color.core.graph import build_instance
from f_edge_color.formats.fgr import write_fgr


def ones(n):
    return [1] * n


@pytest.fixture
def triangle():
    """K3 with f = 1."""
    return build_instance(3, [(0, 1), (1, 2), (0, 2)], ones(3))


@pytest.fixture
def c5():
    """The 5-cycle with f = 1 (odd cycle, Class 2)."""
    return gen_family("cycle", [5], "const:1")


@pytest.fixture
def k33():
    """K_{3,3} with f = 1."""
    return gen_family("complete_bipartite", [3, 3], "const:1")


@pytest.fixture
def k4():
    """K4 with f = 1 (Class 1 decided by search)."""
    return gen_family("complete", [4], "const:1")


@pytest.fixture
def petersen():
    """Petersen graph with f = 1 (Class 2)."""
    return gen_family("petersen", [], "const:1")


@pytest.fixture
def w_instance():
    """The exceptional 5-wheel: f = 2 at the hub, 1 on the rim."""
    return graph_w()


@pytest.fixture
def even_triangle():
    """K3 with f = 2 everywhere."""
    return build_instance(3, [(0, 1), (1, 2), (0, 2)], [2, 2, 2])


@pytest.fixture
def k5_f3():
    """K5 with f = 3: delta_f = 2 and nobody is f-maximum."""
    return gen_family("complete", [5], "const:3")


@pytest.fixture
def c5_pendant():
    """C5 plus a pendant vertex at vertex 0: the f-core is the single vertex 0."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5)]
    return build_instance(6, edges, ones(6))


@pytest.fixture
def unicyclic_core():
    """Triangle 0-1-2 whose f-core also holds a tail vertex 3 (unicyclic, not 2-regular)."""
    edges = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6), (3, 7)]
    return build_instance(8, edges, ones(8))


@pytest.fixture
def net():
    """Triangle with one pendant at every corner: pendants break a necessary condition."""
    edges = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]
    return build_instance(6, edges, ones(6))


@pytest.fixture
def clique_pair_matching():
    """Two K5 joined by a 2-edge matching, f = 1."""
    return gen_family("clique_pair", [5, 2], "const:1")


@pytest.fixture
def clawfree_instance():
    """Claw-free instance with an f = 2 hub that only the claw-free rule settles.

    Triangle 0-1-2 and 4-cycle 3-4-5-6 form the f-core; hub 7 (f = 2) sees 0, 1, 2,
    3, 4 and vertex 8 sees 5 and 6.
    """
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (3, 6)]
    edges += [(7, v) for v in (0, 1, 2, 3, 4)]
    edges += [(8, 5), (8, 6)]
    return build_instance(9, edges, [1, 1, 1, 1, 1, 1, 1, 2, 1])


@pytest.fixture
def two_triangles():
    """Two disjoint triangles, f = 1."""
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    return build_instance(6, edges, ones(6))


@pytest.fixture
def fgr_dir(tmp_path):
    """Directory with a few .fgr files written through the generator."""
    write_fgr(tmp_path / "b_k33.fgr", gen_family("complete_bipartite", [3, 3]))
    write_fgr(tmp_path / "a_c5.fgr", gen_family("cycle", [5]))
    write_fgr(tmp_path / "c_w.fgr", graph_w())
    return tmp_path



@pytest.fixture
def reset_logging():
    """Drop the handlers setup_logging installs on the root logger."""
    root = logging.getLogger()
    level = root.level
    yield
    for handler in root.handlers[:]:
        if type(handler) in (logging.StreamHandler, logging.FileHandler):
            root.removeHandler(handler)
            handler.close()
    root.setLevel(level)
