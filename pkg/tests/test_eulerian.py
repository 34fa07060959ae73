from cubegrowth.core.eulerian import eulerian_status


def test_genus2_is_eulerian(genus2):
    report = eulerian_status(genus2)
    assert report.eulerian
    assert report.dimension == 2
    assert report.pure
    assert report.euler_characteristic == -2
    assert report.vertex_links_spheres
    assert report.failures() == []


def test_top_cells_pass_automatically(genus2):
    report = eulerian_status(genus2)
    squares = [entry for entry in report.cubes if entry.dimension == 2]
    assert len(squares) == 6
    assert all(e.link_dimension == -1 and e.link_euler_characteristic == 0 and e.ok for e in squares)


def test_fig1_fails_at_x(fig1):
    report = eulerian_status(fig1)
    assert not report.eulerian
    entry = next(e for e in report.cubes if e.cube == "x")
    assert entry.link_euler_characteristic == 1
    assert entry.required == 2
    assert not entry.ok


def test_cube3_corner_link_is_a_triangle(cube3):
    report = eulerian_status(cube3)
    assert not report.eulerian
    entry = next(e for e in report.cubes if e.cube == "000")
    assert entry.link_dimension == 2
    assert entry.link_euler_characteristic == 1
    assert not entry.ok


def test_only_genus2_is_eulerian(fig1, square, cube3, tree4, flagfail, genus2):
    verdicts = {c.name: eulerian_status(c).eulerian for c in (fig1, square, cube3, tree4, flagfail, genus2)}
    assert verdicts == {
        "fig1": False, "square": False, "cube3": False, "tree4": False, "flagfail": False, "genus2": True,
    }
