import random

import pytest

from kschur.affine import AffinePermutation
from kschur.alcoves import act_linear, gamma_vectors, pseudo_translation
from kschur.cores import bounded_to_core, k_bounded_partitions, partitions_in_box
from kschur.nilcoxeter import AlgebraElement, act_on_core, kschur
from kschur.rectangles import (
    Rectangle,
    act_on_partition,
    all_rectangles,
    by_columns,
    by_readings,
    by_translations,
    by_windows,
    column_choice,
    translation_weight,
    transpose_weight,
    verify_commutation,
    verify_equivalences,
    verify_main,
)

TEN_WORDS_K4 = [
    (4, 3, 0, 4, 1, 0),
    (2, 4, 3, 0, 4, 1),
    (3, 2, 4, 3, 0, 4),
    (1, 2, 4, 3, 0, 1),
    (1, 3, 2, 4, 3, 0),
    (0, 1, 2, 4, 0, 1),
    (2, 1, 3, 2, 4, 3),
    (0, 1, 3, 2, 4, 0),
    (0, 2, 1, 3, 2, 4),
    (1, 0, 2, 1, 3, 2),
]

# direction -> word of the pseudo-translation, for k = 4
Z_TABLE_K4 = {
    (1, 1, 0, 0, 0): (4, 3, 0, 4, 1, 0),
    (1, 0, 1, 0, 0): (0, 1, 3, 2, 4, 0),
    (0, 1, 1, 0, 0): (0, 1, 2, 4, 0, 1),
    (1, 0, 0, 1, 0): (1, 3, 2, 4, 3, 0),
    (0, 1, 0, 1, 0): (1, 2, 4, 3, 0, 1),
    (0, 0, 1, 1, 0): (1, 0, 2, 1, 3, 2),
    (1, 0, 0, 0, 1): (3, 2, 4, 3, 0, 4),
    (0, 1, 0, 0, 1): (2, 4, 3, 0, 4, 1),
    (0, 0, 1, 0, 1): (0, 2, 1, 3, 2, 4),
    (0, 0, 0, 1, 1): (2, 1, 3, 2, 4, 3),
}

# column subset -> word of the shifted cyclically decreasing product, k = 4
V_TABLE_K4 = {
    (0, 1): (1, 0, 2, 1, 3, 2),
    (0, 2): (2, 0, 3, 1, 4, 2),
    (0, 3): (3, 0, 4, 1, 0, 2),
    (0, 4): (0, 4, 1, 0, 2, 1),
    (1, 2): (2, 1, 3, 2, 4, 3),
    (1, 3): (3, 1, 4, 2, 0, 3),
    (1, 4): (4, 1, 0, 2, 1, 3),
    (2, 3): (3, 2, 4, 3, 0, 4),
    (2, 4): (4, 2, 0, 3, 1, 4),
    (3, 4): (4, 3, 0, 4, 1, 0),
}

# chosen window positions -> window of the direct construction, k = 4
WINDOW_TABLE_K4 = {
    (1, 2): (-2, -1, 5, 6, 7),
    (1, 3): (-2, 4, 0, 6, 7),
    (1, 4): (-2, 4, 5, 1, 7),
    (1, 5): (-2, 4, 5, 6, 2),
    (2, 3): (3, -1, 0, 6, 7),
    (2, 4): (3, -1, 5, 1, 7),
    (2, 5): (3, -1, 5, 6, 2),
    (3, 4): (3, 4, 0, 1, 7),
    (3, 5): (3, 4, 0, 6, 2),
    (4, 5): (3, 4, 5, 1, 2),
}


def element_from_words(k, words):
    return AlgebraElement(
        k, [(AffinePermutation.from_word(k, word), 1) for word in words]
    )


def binomial(n, t):
    out = 1
    for d in range(1, t + 1):
        out = out * (n - d + 1) // d
    return out


def test_rectangle_validation():
    Rectangle(4, cols=2, rows=3)
    with pytest.raises(ValueError):
        Rectangle(4, cols=2, rows=2)
    with pytest.raises(ValueError):
        Rectangle(4, cols=5, rows=0)
    assert Rectangle.with_rows(4, 3) == Rectangle(4, cols=2, rows=3)
    assert Rectangle(4, cols=2, rows=3).partition() == (2, 2, 2)
    assert Rectangle(4, cols=2, rows=3).transpose() == Rectangle(4, cols=3, rows=2)


def test_by_readings_k4():
    assert by_readings(Rectangle(4, cols=2, rows=3)) == element_from_words(
        4, TEN_WORDS_K4
    )


def test_by_readings_k1():
    # the two contained partitions of the 1x1 box give the two generators
    assert by_readings(Rectangle(1, cols=1, rows=1)) == element_from_words(
        1, [(0,), (1,)]
    )


def test_term_counts():
    for k in range(1, 8):
        for rect in all_rectangles(k):
            elem = by_readings(rect)
            assert len(elem) == binomial(k + 1, rect.cols)
            assert all(c == 1 for _, c in elem.items())
            assert all(w.length() == rect.cols * rect.rows for w, _ in elem.items())


def test_by_translations_table_k4():
    expected = {
        AffinePermutation.from_word(4, word): gamma
        for gamma, word in Z_TABLE_K4.items()
    }
    elem = by_translations(Rectangle(4, cols=2, rows=3))
    assert sorted(w.window for w in expected) == [w.window for w in elem.support()]
    for gamma, word in Z_TABLE_K4.items():
        assert pseudo_translation(gamma) == AffinePermutation.from_word(4, word)


def test_by_columns_table_k4():
    for subset, word in V_TABLE_K4.items():
        expected = AffinePermutation.from_word(4, word)
        built = AffinePermutation.identity(4)
        from kschur.nilcoxeter import cyclically_decreasing_word

        for d in range(3):
            shifted = [(a + d) % 5 for a in subset]
            for i in cyclically_decreasing_word(4, shifted):
                built = built.right_mult(i)
        assert built == expected
    assert by_columns(Rectangle(4, cols=2, rows=3)) == element_from_words(
        4, list(V_TABLE_K4.values())
    )


def test_by_windows_table_k4():
    elem = by_windows(Rectangle(4, cols=2, rows=3))
    expected = {AffinePermutation(4, window) for window in WINDOW_TABLE_K4.values()}
    assert set(elem.support()) == expected
    # spot check the arithmetic of one window
    assert WINDOW_TABLE_K4[(1, 4)] == (1 - 3, 2 + 2, 3 + 2, 4 - 3, 5 + 2)


def test_all_four_agree_small():
    for k in range(1, 6):
        for rect in all_rectangles(k):
            x = by_readings(rect)
            assert x == by_translations(rect)
            assert x == by_columns(rect)
            assert x == by_windows(rect)


def test_column_choice_worked_example():
    rect = Rectangle(9, cols=4, rows=6)
    assert column_choice(rect, (4, 3, 2, 2, 1)) == (0, 2, 5, 7)


def test_column_choice_extremes():
    rect = Rectangle(4, cols=2, rows=3)
    assert column_choice(rect, ()) == (3, 4)
    assert column_choice(rect, (2, 2, 2)) == (0, 1)
    with pytest.raises(ValueError):
        column_choice(rect, (3,))


def test_column_choice_matches_readings():
    # the reading-word term of each contained partition is the column
    # term of its subset
    from kschur.cores import skew_reading_word
    from kschur.nilcoxeter import cyclically_decreasing_word

    for k in range(1, 8):
        for rect in all_rectangles(k):
            c, r = rect.cols, rect.rows
            seen = set()
            for nu in partitions_in_box(c, r):
                subset = column_choice(rect, nu)
                assert subset not in seen
                seen.add(subset)
                outer = (c,) * r + nu
                reading = AffinePermutation.from_word(
                    k, skew_reading_word(outer, nu, k)
                )
                word = []
                for d in range(r):
                    word.extend(
                        cyclically_decreasing_word(k, [(a + d) % (k + 1) for a in subset])
                    )
                assert reading == AffinePermutation.from_word(k, word), (k, rect, nu)


def test_translation_weight_known():
    rect = Rectangle(4, cols=2, rows=3)
    assert translation_weight(rect, ()) == (1, 1, 0, 0, 0)
    assert translation_weight(rect, (2, 2, 2)) == (0, 0, 1, 1, 0)


def test_translation_weight_bijection():
    for k in range(1, 8):
        for rect in all_rectangles(k):
            images = {
                translation_weight(rect, nu)
                for nu in partitions_in_box(rect.cols, rect.rows)
            }
            assert images == set(gamma_vectors(k, rect.cols))


def test_translation_weight_matches_readings():
    from kschur.cores import skew_reading_word

    for k in range(1, 6):
        for rect in all_rectangles(k):
            c, r = rect.cols, rect.rows
            for nu in partitions_in_box(c, r):
                outer = (c,) * r + nu
                reading = AffinePermutation.from_word(
                    k, skew_reading_word(outer, nu, k)
                )
                assert reading == pseudo_translation(translation_weight(rect, nu))


def test_transpose_weight_smallest_case():
    rect = Rectangle(1, cols=1, rows=1)
    assert transpose_weight(rect, (1, 0)) == (1, 0)
    assert transpose_weight(rect, (0, 1)) == (0, 1)
    with pytest.raises(ValueError):
        transpose_weight(rect, (1, 1))


def test_transpose_weight_matches_index_reflection():
    for k in range(1, 6):
        for rect in all_rectangles(k):
            for gamma in gamma_vectors(k, rect.cols):
                reflected = pseudo_translation(gamma).reflect_indices()
                assert reflected == pseudo_translation(transpose_weight(rect, gamma))


def test_transpose_weight_bijection():
    for k in range(1, 6):
        for rect in all_rectangles(k):
            images = {
                transpose_weight(rect, gamma)
                for gamma in gamma_vectors(k, rect.cols)
            }
            assert images == set(gamma_vectors(k, rect.rows))


def test_single_generator_commutation_instance():
    # conjugating one pseudo-translation: z_gamma s_i = s_{i+c} z_{s_i gamma}
    rng = random.Random(0)
    for _ in range(60):
        k = rng.randint(1, 5)
        c = rng.randint(1, k)
        gamma = rng.choice(gamma_vectors(k, c))
        i = rng.randrange(k + 1)
        s_i = AffinePermutation.identity(k).right_mult(i)
        s_shift = AffinePermutation.identity(k).right_mult((i + c) % (k + 1))
        moved = tuple(int(x) for x in act_linear(s_i, gamma))
        assert pseudo_translation(gamma) * s_i == s_shift * pseudo_translation(moved)


def test_act_on_partition_examples():
    rect = Rectangle(4, cols=2, rows=3)
    assert act_on_partition(rect, ()) == bounded_to_core((2, 2, 2), 4)
    assert act_on_partition(rect, (1,)) == bounded_to_core((2, 2, 2, 1), 4)


def test_act_on_partition_single_term_exhaustive():
    for k in range(1, 5):
        for rect in all_rectangles(k):
            for n in range(5):
                for lam in k_bounded_partitions(n, k):
                    core = bounded_to_core(lam, k)
                    image = act_on_core(by_readings(rect), core)
                    assert len(image) == 1
                    assert set(image.values()) == {1}


def test_verify_equivalences_report():
    report = verify_equivalences(7)
    assert report.passed
    assert len(report.checks) == sum(range(1, 8))
    payload = report.to_dict()
    assert payload["passed"] is True
    assert len(payload["checks"]) == len(report.checks)


def test_verify_main_report():
    for k in range(1, 4):
        for rect in all_rectangles(k):
            assert verify_main(rect, action_size=3).passed


def test_verify_main_equals_kschur():
    for k in range(1, 6):
        for rect in all_rectangles(k):
            assert by_readings(rect) == kschur(k, rect.partition())


def test_row_rectangle_is_h():
    from kschur.nilcoxeter import h

    for k in range(1, 6):
        rect = Rectangle(k, cols=k, rows=1)
        assert by_readings(rect) == h(k, k)


def test_verify_commutation_report():
    for k in range(1, 5):
        for rect in all_rectangles(k):
            report = verify_commutation(rect)
            assert report.passed
            assert len(report.checks) == k + 1
