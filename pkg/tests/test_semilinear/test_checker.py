import random

import pytest
from energy_games.coloring import Color, NoStablePattern, compute_coloring, detect_periodic_parameters
from energy_games.models import OcaConf, steps
from energy_games.semilinear import (
    Accepted,
    InvalidUPCError,
    Rejected,
    UltimatelyPeriodicColoring,
    UnknownPairError,
    check_simulation_candidate,
    coloring_to_upc,
    upc_color,
)
from energy_games.solvers import Bounds
from tests.machines import one_counter, sweep_pair

BOUNDS = Bounds(counter_cap=12, energy_cap=1, round_cap=30)
STAIRCASE = one_counter([("p", "a", -1, "p")]), one_counter([("r", "a", -1, "r")])
PARITY = (
    one_counter([("p", "a", -1, "q"), ("q", "a", -1, "p")], zero=[("p", "b", 0, "p")]),
    one_counter([("r", "a", 0, "r")]),
)


def distilled(machines) -> UltimatelyPeriodicColoring:
    grid = compute_coloring(*machines, 9, 9, BOUNDS)
    upc = coloring_to_upc(grid, detect_periodic_parameters(grid))
    assert isinstance(upc, UltimatelyPeriodicColoring)
    return upc


def oracle_violations(a, a_prime, upc: UltimatelyPeriodicColoring, m_limit: int, m_prime_limit: int) -> list:
    """White points with a Spoiler step that no Duplicator step answers inside the White region."""
    violations = []
    for left in a.states:
        for right in a_prime.states:
            for m in range(m_limit + 1):
                for m_prime in range(m_prime_limit + 1):
                    if upc_color(upc, left, right, m, m_prime) is not Color.WHITE:
                        continue
                    answers = steps(a_prime, OcaConf(right, m_prime))
                    for action, target in steps(a, OcaConf(left, m)):
                        if not any(
                            answer == action
                            and upc_color(upc, target.state, response.state, target.counter, response.counter)
                            is Color.WHITE
                            for answer, response in answers
                        ):
                            violations.append((left, m, right, m_prime, action))
    return violations


@pytest.mark.parametrize("machines", [STAIRCASE, PARITY], ids=["staircase", "parity"])
def test_distilled_colouring_is_accepted(machines):
    """Tests that distilled colourings are accepted and closed three periods beyond the window."""
    upc = distilled(machines)
    threshold, period, threshold_prime, period_prime, slope = upc.shape

    assert check_simulation_candidate(*machines, upc) == Accepted()
    assert oracle_violations(
        *machines, upc, threshold + 3 * period, threshold_prime + 3 * period_prime + 3 * slope
    ) == []


def test_staircase_has_slope_one():
    """Tests the slope of the diagonal boundary."""
    upc = distilled(STAIRCASE)

    assert upc.slope == 1 and upc.period == 1
    assert check_simulation_candidate(*STAIRCASE, upc, [("p", 40, "r", 40)]) == Accepted()
    assert check_simulation_candidate(*STAIRCASE, upc, [("p", 41, "r", 40)]).reason == "RequiredPairNotIncluded"


def test_flipping_a_black_cell_is_rejected():
    """Tests that every Black window cell turned White breaks closure, with a confirmed witness."""
    for machines in (STAIRCASE, PARITY):
        upc = distilled(machines)
        rejected = 0
        for window in upc.windows:
            for m_prime, row in enumerate(window.rows):
                for m, symbol in enumerate(row):
                    if symbol != "B":
                        continue
                    rows = list(window.rows)
                    rows[m_prime] = row[:m] + "W" + row[m + 1 :]
                    flipped = upc.model_copy(
                        update={
                            "windows": tuple(
                                w.model_copy(update={"rows": tuple(rows)}) if w is window else w for w in upc.windows
                            )
                        }
                    )
                    flipped = UltimatelyPeriodicColoring.model_validate(flipped.model_dump())

                    result = check_simulation_candidate(*machines, flipped)

                    assert isinstance(result, Rejected)
                    left, wm, right, wm_prime = result.point
                    assert oracle_violations(*machines, flipped, wm, wm_prime).count(
                        (left, wm, right, wm_prime, result.step.split(" ")[0])
                    ) == 1
                    rejected += 1
        assert rejected > 0


def test_all_black_misses_required_pair():
    """Tests that a required point outside the White region is reported."""
    spoiler, duplicator = STAIRCASE
    upc = UltimatelyPeriodicColoring.model_validate(
        {
            "left_states": ["p"],
            "right_states": ["r"],
            "threshold": 0,
            "period": 1,
            "threshold_prime": 0,
            "period_prime": 1,
            "windows": [{"left": "p", "right": "r", "rows": ["1B"]}],
        }
    )

    result = check_simulation_candidate(spoiler, duplicator, upc, [("p", 0, "r", 0)])

    assert result == Rejected(point=("p", 0, "r", 0), reason="RequiredPairNotIncluded")
    assert check_simulation_candidate(spoiler, duplicator, upc) == Accepted()


def test_malformed_and_undeclared_colourings():
    """Tests the structural errors of the checker."""
    spoiler, duplicator = STAIRCASE
    payload = {
        "left_states": ["p"],
        "right_states": ["r"],
        "threshold": 1,
        "period": 3,
        "threshold_prime": 0,
        "period_prime": 1,
        "windows": [{"left": "p", "right": "r", "rows": ["WW"]}],
    }

    with pytest.raises(InvalidUPCError):
        check_simulation_candidate(spoiler, duplicator, UltimatelyPeriodicColoring.model_validate(payload))
    other = one_counter([("s", "a", -1, "s")])
    with pytest.raises(UnknownPairError):
        check_simulation_candidate(
            other, duplicator, UltimatelyPeriodicColoring.model_validate(payload | {"period": 1})
        )


def flip(upc: UltimatelyPeriodicColoring, window_index: int, m: int, m_prime: int) -> UltimatelyPeriodicColoring:
    window = upc.windows[window_index]
    rows = list(window.rows)
    rows[m_prime] = rows[m_prime][:m] + "W" + rows[m_prime][m + 1 :]
    windows = list(upc.windows)
    windows[window_index] = window.model_copy(update={"rows": tuple(rows)})
    return UltimatelyPeriodicColoring.model_validate(upc.model_copy(update={"windows": tuple(windows)}).model_dump())


def test_random_distilled_colourings_and_their_perturbations():
    """Tests distilled colourings of seeded random pairs and 50 Black-to-White flips of each."""
    perturbed_pairs = 0
    for seed in range(200):
        spoiler, duplicator, grid, pattern = sweep_pair(seed)
        if isinstance(pattern, NoStablePattern):
            continue
        upc = coloring_to_upc(grid, pattern)
        if not isinstance(upc, UltimatelyPeriodicColoring):
            continue
        threshold, period, threshold_prime, period_prime, slope = upc.shape

        assert check_simulation_candidate(spoiler, duplicator, upc) == Accepted(), f"seed {seed}"
        assert oracle_violations(
            spoiler, duplicator, upc, threshold + 3 * period, threshold_prime + 3 * period_prime + 3 * slope
        ) == []

        blacks = [
            (index, m, m_prime)
            for index, window in enumerate(upc.windows)
            for m_prime, row in enumerate(window.rows)
            for m, symbol in enumerate(row)
            if symbol == "B"
        ]
        if not blacks:
            continue
        rng = random.Random(seed)
        for _ in range(50):
            flipped = flip(upc, *rng.choice(blacks))

            result = check_simulation_candidate(spoiler, duplicator, flipped)

            assert isinstance(result, Rejected), f"seed {seed}"
            left, m, right, m_prime = result.point
            assert (left, m, right, m_prime, result.step.split(" ")[0]) in oracle_violations(
                spoiler, duplicator, flipped, m, m_prime
            )
        perturbed_pairs += 1
        if perturbed_pairs == 10:
            break

    assert perturbed_pairs == 10
