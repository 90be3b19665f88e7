#!/usr/bin/env python3
"""Print the bundled three-node reference assessment with both combiners."""
from betatrust import COMBINERS, fixture_three_node, render_matrices, run_assessment


def main() -> None:
    network = fixture_three_node()
    for method in ("beta", "average"):
        result = run_assessment(network, COMBINERS[method])
        print(render_matrices([1, 2, 3], result.as_matrix_dict(),
                              comments=[f"combiner: {method}"]))
        for error in result.errors:
            print(f"edge {error.from_node}->{error.to_node}: {error.message}")


if __name__ == "__main__":
    main()
