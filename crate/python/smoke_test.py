"""Smoke test for the polyideal_py extension module.

Build and install it first:

    pip install --no-build-isolation crates/python
"""

import polyideal_py as pi

F1 = "x(1,3)*x(3,1)*x(7,4)*x(8,2) - x(1,2)*x(3,4)*x(7,1)*x(8,3)"


def main():
    ears = pi.Polyomino.fixture("two_ears")
    assert ears.rank == 15
    assert ears.holes == [(3, 2), (5, 2)]
    assert ears.render() == ".#####.\n##.#.##\n.#####.\n"
    assert pi.Polyomino.parse(ears.render()) == ears
    assert len(ears.inner_2_minors()) == 46
    assert ears.toric_member(F1)

    walks = pi.find_zigzag(ears, all=True)
    assert len(walks) == 4
    assert all(len(w["intervals"]) == 4 for w in walks)

    rec = pi.classify(ears)
    assert rec["status"] == "not_prime"
    checks = rec["certificate"]["checks"]
    assert checks["x_v1_times_fW_in_IP"] and checks["fW_not_in_IP"]

    frame = pi.make_grid(4, 4, [(2, 3)], [(2, 3)])
    assert frame == pi.Polyomino.fixture("square_frame")
    assert pi.recognize_grid(frame) == (4, 4, [(2, 3)], [(2, 3)])
    assert pi.classify(frame)["status"] == "prime"
    assert frame.ideal_basis() == frame.toric_basis()

    counts = pi.count_by_class(9)
    assert counts["multiply_connected"] == 37
    assert len(pi.enumerate_free(8, "holey")) == 6

    try:
        pi.Polyomino([(1, 1), (2, 2)])
    except ValueError:
        pass
    else:
        raise AssertionError("diagonal cells should be rejected")

    print("smoke test passed")


if __name__ == "__main__":
    main()
