import pytest

from soscascade import (
    AlphaAssignment,
    NodeKind,
    NodeProfile,
    StrategyRule,
    StrategySpec,
    apply_strategy,
    build_graph,
    load_strategy,
    parse_strategy,
)
from soscascade import data as shipped
from soscascade.errors import MissingKindMetadata, SchemaError, UnknownNode


def kinded_graph():
    return build_graph(
        [
            NodeProfile("hub", NodeKind.CORE),
            NodeProfile("arm", NodeKind.AUXILIARY_POWER),
            NodeProfile("port", NodeKind.DOCKING),
        ],
        [("hub", "arm", 0.5), ("hub", "port", 1.0)],
    )


class TestStrategySpec:
    def test_protected_must_not_exceed_unprotected(self):
        with pytest.raises(SchemaError):
            StrategySpec("bad", StrategyRule.UNIFORM_BASELINE, 0.8, 0.5)

    @pytest.mark.parametrize("value", [-0.1, 1.5, "0.3", None])
    def test_factor_bounds(self, value):
        with pytest.raises(SchemaError):
            StrategySpec("bad", StrategyRule.UNIFORM_BASELINE, value)

    def test_override_bounds(self):
        with pytest.raises(SchemaError):
            StrategySpec(
                "bad", StrategyRule.CUSTOM, 0.0, 1.0, custom_overrides={"x": 1.5}
            )


class TestApplyStrategy:
    def test_uniform_baseline_covers_every_node(self):
        g = kinded_graph()
        spec = StrategySpec("base", StrategyRule.UNIFORM_BASELINE, 0.3)
        assert apply_strategy(spec, g).alpha == {"arm": 0.3, "hub": 0.3, "port": 0.3}

    def test_habitation_only_protects_core(self):
        g = kinded_graph()
        spec = StrategySpec("hab", StrategyRule.HABITATION_ONLY, 0.3, 1.0)
        assert apply_strategy(spec, g).alpha == {"arm": 1.0, "hub": 0.3, "port": 1.0}

    def test_habitation_only_on_default_topology(self, gateway_graph):
        spec = StrategySpec("hab", StrategyRule.HABITATION_ONLY, 0.3, 1.0)
        alpha = apply_strategy(spec, gateway_graph).alpha
        assert alpha["halo"] == 0.3
        assert alpha["i_hab"] == 0.3
        assert alpha["esprit_erm"] == 0.3
        assert alpha["canadarm3"] == 1.0
        assert alpha["hls_dock"] == 1.0

    def test_habitation_only_needs_kind(self):
        g = build_graph([NodeProfile("a"), NodeProfile("b", NodeKind.CORE)], [("a", "b", 1.0)])
        spec = StrategySpec("hab", StrategyRule.HABITATION_ONLY, 0.3, 1.0)
        with pytest.raises(MissingKindMetadata, match="'a'"):
            apply_strategy(spec, g)

    def test_custom_override(self):
        g = kinded_graph()
        spec = StrategySpec("cut", StrategyRule.CUSTOM, 0.0, 1.0, custom_overrides={"arm": 0.0})
        assert apply_strategy(spec, g).alpha == {"arm": 0.0, "hub": 1.0, "port": 1.0}

    def test_custom_override_unknown_node(self):
        g = kinded_graph()
        spec = StrategySpec("cut", StrategyRule.CUSTOM, 0.0, 1.0, custom_overrides={"ghost": 0.0})
        with pytest.raises(UnknownNode):
            apply_strategy(spec, g)

    def test_noncore_profile_change_does_not_touch_core_alpha(self):
        spec = StrategySpec("hab", StrategyRule.HABITATION_ONLY, 0.25, 0.9)
        g1 = kinded_graph()
        g2 = build_graph(
            [
                NodeProfile("hub", NodeKind.CORE),
                NodeProfile("arm", NodeKind.DOCKING),  # was auxiliary
                NodeProfile("port", NodeKind.DOCKING),
            ],
            [("hub", "arm", 0.5), ("hub", "port", 1.0)],
        )
        assert apply_strategy(spec, g1).alpha["hub"] == apply_strategy(spec, g2).alpha["hub"]

    def test_output_covers_exactly_the_node_set(self, gateway_graph):
        for spec in (
            StrategySpec("u", StrategyRule.UNIFORM_BASELINE, 0.5),
            StrategySpec("h", StrategyRule.HABITATION_ONLY, 0.2, 0.8),
            StrategySpec("c", StrategyRule.CUSTOM, 0.0, 1.0, custom_overrides={"halo": 0.1}),
        ):
            alpha = apply_strategy(spec, gateway_graph).alpha
            assert set(alpha) == set(gateway_graph.node_ids)
            assert all(0.0 <= x <= 1.0 for x in alpha.values())


class TestAlphaAssignment:
    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            AlphaAssignment({"a": 1.0001})


class TestStrategyFiles:
    def test_shipped_baseline(self):
        spec = load_strategy(shipped.baseline_strategy_path())
        assert spec.rule is StrategyRule.UNIFORM_BASELINE
        assert spec.protected_alpha == 0.3

    def test_shipped_habitation_only(self):
        spec = load_strategy(shipped.habitation_only_strategy_path())
        assert spec.rule is StrategyRule.HABITATION_ONLY
        assert (spec.protected_alpha, spec.unprotected_alpha) == (0.3, 1.0)

    def test_unknown_rule(self):
        with pytest.raises(SchemaError, match="everything"):
            parse_strategy({"name": "x", "rule": "everything", "protected_alpha": 0.1})

    def test_unknown_key(self):
        with pytest.raises(SchemaError, match="color"):
            parse_strategy(
                {"name": "x", "rule": "custom", "protected_alpha": 0.1, "color": "red"}
            )

    def test_missing_required(self):
        with pytest.raises(SchemaError, match="protected_alpha"):
            parse_strategy({"name": "x", "rule": "custom"})
