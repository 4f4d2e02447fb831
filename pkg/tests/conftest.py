"""Shared strategies. Random walls are grown by stacking random legal
blocks on the ground, so everything generated is stackable by
construction; pass proper=True to keep every intermediate wall proper."""

from hypothesis import HealthCheck, settings, strategies as st

from youngwalls.wall import add_block, addable_slots, ground_wall, is_proper

settings.register_profile(
    "exact",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("exact")

ALL_SPECS = (
    ("A1:1", 0), ("A1:2", 0), ("A1:2", 1), ("A2odd:3", 0), ("A2odd:3", 1),
    ("D1:4", 0), ("D1:4", 3), ("A2even:1", 0), ("A2even:2", 0),
    ("D2:2", 0), ("D2:2", 2), ("B1:3", 0), ("B1:3", 3),
)


@st.composite
def walls(draw, specs=ALL_SPECS, max_blocks=12, proper=False):
    spec, lam = draw(st.sampled_from(specs))
    w = ground_wall(spec, lam)
    for _ in range(draw(st.integers(0, max_blocks))):
        slots = addable_slots(w)
        if proper:
            slots = [b for b in slots if is_proper(add_block(w, b))]
        if not slots:
            break
        w = add_block(w, draw(st.sampled_from(slots)))
    return w
