from hypothesis import strategies as st

from cmtate.cm import CMFactor
from cmtate.groups import CosetSpace, build_group, preset_names
from cmtate.reduction import all_cm_types

SMALL = [n for n in preset_names() if build_group(n).order <= 12]


def cm_spaces(G):
    return [CosetSpace(H) for H in G.all_subgroups() if G.iota not in H]


@st.composite
def cm_factor_sets(draw, max_factors=3):
    """(G, factors): distinct random CM-types on a small preset group."""
    G = build_group(draw(st.sampled_from(SMALL)))
    spaces = cm_spaces(G)
    k = draw(st.integers(1, max_factors))
    out, keys = [], set()
    for j in range(k):
        sp = draw(st.sampled_from(spaces))
        phi = draw(st.sampled_from(list(all_cm_types(sp))))
        f = CMFactor(f"F{j}", sp, phi)
        if f.key() not in keys:
            keys.add(f.key())
            out.append(f)
    return G, out


@st.composite
def reduction_setups(draw):
    G, factors = draw(cm_factor_sets())
    D = draw(st.sampled_from(G.all_subgroups()))
    return G, factors, D
