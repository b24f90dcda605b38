"""Category dictionaries: .dic parsing, hierarchy closure, token matching.

The lexicon holds literal stems and trailing-star prefix stems, each tagged
with one or more category ids. Matching is case-insensitive and follows a
fixed precedence: an exact literal entry beats every wildcard, and among
wildcards the longest stem wins, so exactly one entry supplies the category
set for a token. After hierarchy closure a pattern tagged with a child
category also carries all of its ancestors, which keeps parent counts at
least as large as child counts downstream.
"""

from dataclasses import dataclass, field

from .errors import (CycleDetected, DuplicatePattern, FormatError,
                     UnknownCategory)

_MAX_DEPTH = 3


@dataclass(frozen=True, slots=True)
class Category:
    id: int
    name: str
    parent: int | None = None


@dataclass(frozen=True, slots=True)
class Pattern:
    stem: str
    wildcard: bool
    category_ids: frozenset[int]


class _TrieNode:
    __slots__ = ("children", "literal", "wildcard")

    def __init__(self):
        self.children = {}
        self.literal = None    # frozenset of category ids, exact match
        self.wildcard = None   # frozenset of category ids, prefix match


@dataclass(frozen=True)
class Dictionary:
    language: str
    categories: tuple[Category, ...]
    patterns: tuple[Pattern, ...]
    _by_id: dict = field(init=False, repr=False, compare=False)
    _by_name: dict = field(init=False, repr=False, compare=False)
    _root: _TrieNode = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        by_id = {}
        by_name = {}
        for cat in self.categories:
            if cat.id in by_id:
                raise ValueError(f"duplicate category id {cat.id}")
            by_id[cat.id] = cat
            by_name.setdefault(cat.name.casefold(), cat)
        seen = set()
        root = _TrieNode()
        for pat in self.patterns:
            if not pat.stem:
                raise ValueError("empty pattern stem")
            key = (pat.stem, pat.wildcard)
            if key in seen:
                raise DuplicatePattern(f"pattern {pat.stem!r} wildcard={pat.wildcard}")
            seen.add(key)
            for cid in pat.category_ids:
                if cid not in by_id:
                    raise UnknownCategory(f"pattern {pat.stem!r} references category {cid}")
            node = root
            for ch in pat.stem:
                node = node.children.setdefault(ch, _TrieNode())
            if pat.wildcard:
                node.wildcard = pat.category_ids
            else:
                node.literal = pat.category_ids
        object.__setattr__(self, "_by_id", by_id)
        object.__setattr__(self, "_by_name", by_name)
        object.__setattr__(self, "_root", root)

    def category(self, category_id: int) -> Category:
        try:
            return self._by_id[category_id]
        except KeyError:
            raise UnknownCategory(f"no category with id {category_id}") from None

    def category_by_name(self, name: str) -> Category:
        try:
            return self._by_name[name.casefold()]
        except KeyError:
            raise UnknownCategory(f"no category named {name!r}") from None

    def ancestors(self, category_id: int) -> tuple[int, ...]:
        out = []
        seen = {category_id}
        cat = self.category(category_id)
        while cat.parent is not None:
            if cat.parent in seen:
                raise CycleDetected(f"cycle through category {cat.parent}")
            seen.add(cat.parent)
            out.append(cat.parent)
            cat = self.category(cat.parent)
        return tuple(out)

    def match_token(self, normalized: str) -> frozenset[int]:
        """Category ids of the winning entry for a normalized token.

        Returns the empty set when nothing matches.
        """
        node = self._root
        best_wildcard = None
        for ch in normalized:
            node = node.children.get(ch)
            if node is None:
                break
            if node.wildcard is not None:
                best_wildcard = node.wildcard
        if node is not None and node.literal is not None:
            return node.literal
        if best_wildcard is not None:
            return best_wildcard
        return frozenset()


def match_token(dictionary: Dictionary, normalized: str) -> frozenset[int]:
    return dictionary.match_token(normalized)


def parse_dic(source: str, language: str) -> Dictionary:
    """Parse LIWC-style .dic text.

    Grammar: a '%' line, category declarations (id<TAB>name), a closing '%'
    line, then one entry per line (stem[*]<TAB>id[<TAB>id...]). Blank lines
    are ignored.
    """
    lines = source.split("\n")
    categories: list[Category] = []
    cat_ids: set[int] = set()
    patterns: list[Pattern] = []
    seen_patterns: set[tuple[str, bool]] = set()

    section = 0  # 0 = before first %, 1 = categories, 2 = entries
    for lineno, rawline in enumerate(lines, start=1):
        line = rawline.rstrip("\r")
        if lineno == 1:
            line = line.lstrip("﻿")
        if not line.strip():
            continue
        if section == 0:
            if line.strip() != "%":
                raise FormatError("expected opening '%'", line=lineno)
            section = 1
            continue
        if section == 1:
            if line.strip() == "%":
                section = 2
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise FormatError(f"category line needs id<TAB>name, got {line!r}",
                                  line=lineno)
            try:
                cid = int(parts[0])
            except ValueError:
                raise FormatError(f"category id {parts[0]!r} is not an integer",
                                  line=lineno) from None
            name = parts[1].strip()
            if not name:
                raise FormatError("empty category name", line=lineno)
            if cid in cat_ids:
                raise FormatError(f"duplicate category id {cid}", line=lineno)
            cat_ids.add(cid)
            categories.append(Category(cid, name))
            continue
        # entry section
        parts = line.split("\t")
        if len(parts) < 2:
            raise FormatError(f"entry needs stem<TAB>id..., got {line!r}", line=lineno)
        stem = parts[0].strip().casefold()
        wildcard = stem.endswith("*")
        if wildcard:
            stem = stem[:-1]
        if not stem:
            raise FormatError("empty stem", line=lineno)
        key = (stem, wildcard)
        if key in seen_patterns:
            raise DuplicatePattern(f"line {lineno}: duplicate entry {parts[0]!r}")
        seen_patterns.add(key)
        ids = []
        for p in parts[1:]:
            try:
                cid = int(p)
            except ValueError:
                raise FormatError(f"category id {p!r} is not an integer",
                                  line=lineno) from None
            if cid not in cat_ids:
                raise UnknownCategory(f"line {lineno}: entry {stem!r} cites "
                                      f"undeclared category {cid}")
            ids.append(cid)
        patterns.append(Pattern(stem, wildcard, frozenset(ids)))

    if section < 2:
        raise FormatError("missing closing '%'", line=len(lines))
    return Dictionary(language, tuple(categories), tuple(patterns))


def load_hierarchy(dictionary: Dictionary, tree: str) -> Dictionary:
    """Apply a child<TAB>parent hierarchy and close patterns over ancestors.

    Returns a new dictionary; '#'-prefixed comments and blank lines in the
    tree text are skipped.
    """
    parent_of: dict[int, int] = {}
    known = {c.id for c in dictionary.categories}
    for lineno, rawline in enumerate(tree.split("\n"), start=1):
        line = rawline.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise FormatError(f"hierarchy row needs child<TAB>parent, got {line!r}",
                              line=lineno)
        try:
            child, parent = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-integer category id in {line!r}",
                              line=lineno) from None
        for cid in (child, parent):
            if cid not in known:
                raise UnknownCategory(f"line {lineno}: unknown category {cid}")
        if child in parent_of:
            raise FormatError(f"category {child} already has a parent", line=lineno)
        parent_of[child] = parent

    def ancestors(cid: int) -> list[int]:
        chain = []
        seen = {cid}
        cur = cid
        while cur in parent_of:
            cur = parent_of[cur]
            if cur in seen:
                raise CycleDetected(f"cycle through category {cur}")
            seen.add(cur)
            chain.append(cur)
        return chain

    for cid in known:
        chain = ancestors(cid)
        if len(chain) + 1 > _MAX_DEPTH:
            raise FormatError(f"category {cid} sits at depth {len(chain) + 1}, "
                              f"maximum is {_MAX_DEPTH}")

    categories = tuple(
        Category(c.id, c.name, parent_of.get(c.id)) for c in dictionary.categories)
    patterns = tuple(
        Pattern(p.stem, p.wildcard,
                frozenset(set(p.category_ids).union(
                    *(ancestors(cid) for cid in p.category_ids))))
        for p in dictionary.patterns)
    return Dictionary(dictionary.language, categories, patterns)
