"""
Parsing and rendering of elements, arc lists and formal sums. Everything outside of this module is 0-based;
everything read or written here is 1-based.

Shorthand syntax, JSON is accepted wherever shorthand is:

    l          2143  or  2,1,4,3
    pi         12/3  or  1,2/3
    g          1-2,2-3
    hg, hf     1,2,4/2,3,4
    sc         1,2,3/3,4           (faces are closed downwards)
    lxh        <order>|<inner element>
"""
import itertools
import json
from typing import Any, Dict, List, Optional, Sequence, Tuple

from tabulate import tabulate

from hopfmon.lib.compositions import SetComposition, elements
from hopfmon.lib.formal_sum import FormalSum, key_string
from hopfmon.lib.monoids import MONOIDS, BasisElement, element_from_data


def _numbers(text: str) -> List[int]:
    """'2143' -> [2, 1, 4, 3], '10,2' -> [10, 2]"""
    text = text.strip()
    if not text:
        return []
    if "," in text:
        return [int(v) for v in text.split(",")]
    if not text.isdigit():
        raise ValueError(f"cannot read '{text}' as a list of numbers")
    return [int(v) for v in text]


def parse_permutation(text: str) -> Tuple[int, ...]:
    """1-based one-line notation (digits, commas or JSON) -> 0-based tuple"""
    text = text.strip()
    values = json.loads(text) if text.startswith("[") else _numbers(text)
    if sorted(values) != list(range(1, len(values) + 1)):
        raise ValueError(f"{values} is not a permutation")
    return tuple(v - 1 for v in values)


def parse_arcs(text: str) -> List[Tuple[int, int]]:
    """'2-4,3-5' -> [(2, 4), (3, 5)], 1-based"""
    text = text.strip()
    if not text:
        return []
    if text.startswith("["):
        return [tuple(arc) for arc in json.loads(text)]
    arcs = []
    for item in text.split(","):
        a, _, b = item.partition("-")
        if not b:
            raise ValueError(f"cannot read '{item}' as an arc a-b")
        arcs.append((int(a), int(b)))
    return arcs


def parse_hyperedges(text: str) -> List[List[int]]:
    """'1,2,4/2,3,4' -> [[1, 2, 4], [2, 3, 4]]"""
    text = text.strip()
    if not text:
        return []
    if text.startswith("["):
        return json.loads(text)
    return [_numbers(block) for block in text.split("/")]


def _close_downwards(faces: List[List[int]]) -> List[List[int]]:
    closed = set()
    for face in faces:
        for size in range(2, len(face) + 1):
            closed.update(itertools.combinations(sorted(face), size))
    return [list(f) for f in sorted(closed)]


def _shorthand_data(monoid: str, text: str) -> Any:
    if monoid == "l":
        return _numbers(text)
    if monoid == "g":
        return [list(arc) for arc in parse_arcs(text)]
    if monoid == "sc":
        return _close_downwards(parse_hyperedges(text))
    return parse_hyperedges(text)


def _max_label(data: Any) -> int:
    if isinstance(data, int):
        return data
    return max((_max_label(d) for d in data), default=0)


def parse_element(monoid: str, text: str, n: Optional[int] = None, inner: Optional[str] = None) -> BasisElement:
    """
    Reads an element of the given monoid over [n]. When n is not given it is the largest label used.

    :param monoid: key of MONOIDS
    :param text: JSON data, a JSON object with a 'monoid' key, or shorthand
    :param n: ambient size
    :param inner: second monoid for 'lxh'
    :return: validated element
    """
    text = text.strip()
    if text.startswith("{"):
        return element_from_json(json.loads(text))
    if monoid not in MONOIDS:
        raise ValueError(f"unknown monoid '{monoid}', expected one of {sorted(MONOIDS)}")

    if monoid == "lxh":
        if inner is None:
            raise ValueError("--inner is needed for L x H elements")
        if text.startswith("["):
            data = json.loads(text)
        else:
            order_text, sep, inner_text = text.partition("|")
            if not sep:
                raise ValueError("L x H shorthand is '<order>|<inner element>'")
            data = [_numbers(order_text), _shorthand_data(inner, inner_text)]
    elif text.startswith("["):
        data = json.loads(text)
    else:
        data = _shorthand_data(monoid, text)

    largest = _max_label(data)
    if n is None:
        n = largest
    elif n < largest:
        raise ValueError(f"label {largest} does not fit in [{n}]")
    if n < 1:
        raise ValueError("elements need a nonempty ground set, pass --n for edgeless ones")
    return element_from_data(monoid, data, n, inner=inner)


def element_from_json(obj: Dict[str, Any]) -> BasisElement:
    """{"monoid": ..., "n": ..., "data": ..., "inner": ...} -> element"""
    try:
        monoid, data = obj["monoid"], obj["data"]
    except KeyError as e:
        raise ValueError(f"element JSON is missing {e}") from e
    n = obj.get("n", _max_label(data))
    return element_from_data(monoid, data, n, inner=obj.get("inner"))


def composition_label(parts: SetComposition) -> str:
    """(34,2,1) style label, parts as sorted 1-based digit strings"""
    def block(mask: int) -> str:
        values = [v + 1 for v in elements(mask)]
        sep = "" if all(v < 10 for v in values) else "."
        return sep.join(str(v) for v in values)

    return "(" + ",".join(block(p) for p in parts) + ")"


def int_composition_label(a: Sequence[int]) -> str:
    """(2,1,1)"""
    return "(" + ",".join(str(v) for v in a) + ")"


def render_sum(s: FormalSum, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(s.to_json(), sort_keys=True)
    rows = [[c, key_string(k)] for k, c in sorted(s.items(), key=lambda kc: key_string(kc[0]))]
    return tabulate(rows, headers=["coefficient", "term"])


def render_table(rows: Sequence[Sequence[Any]], headers: Sequence[str], fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps([dict(zip(headers, row)) for row in rows], sort_keys=True)
    return tabulate(rows, headers=list(headers))
