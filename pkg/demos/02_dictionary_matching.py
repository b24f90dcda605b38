"""Dictionary parsing, hierarchy closure, and match precedence.

The lexicon format is the classic two-section .dic file: declared category
ids, then stem entries. A trailing star makes a stem a prefix pattern.
The hierarchy lives in a sidecar file; after closure, matching a child
category implies all of its ancestors.
"""

from pathlib import Path

from lexshift import load_hierarchy, parse_dic
from lexshift.corpus import read_text_file

DICTS = Path(__file__).resolve().parent.parent / "fixtures" / "dictionaries"

flat = parse_dic(read_text_file(DICTS / "sample_en.dic"), "en")
closed = load_hierarchy(flat, read_text_file(DICTS / "sample_en_hierarchy.tsv"))

names = {c.id: c.name for c in closed.categories}
print("categories:", ", ".join(f"{cid}={name}" for cid, name in sorted(names.items())))
print(f"{len(closed.patterns)} patterns loaded\n")

print("== Matching (case-insensitive, one winning entry per token) ==")
for token in ["war", "wars", "bitterness", "bitter", "fighting", "peace",
              "risky", "warfare"]:
    cats = closed.match_token(token)
    shown = ", ".join(names[c] for c in sorted(cats)) or "(no match)"
    print(f"{token:12s} -> {shown}")

print("\nNote the closure: 'war' is tagged anger, so negemo and affect come")
print("along automatically; 'warfare' finds nothing because the sample has")
print("no 'war*' prefix entry, only the literals 'war' and 'wars'.")

print("\n== Precedence: literal beats wildcard, longest wildcard wins ==")
demo = parse_dic("%\n1\tshort\n2\tlong\n3\texact\n%\n"
                 "bit*\t1\nbitter*\t2\nbitters\t3\n", "en")
for token in ["bits", "bitterly", "bitters"]:
    winner = {1: "bit*", 2: "bitter*", 3: "literal bitters"}
    cats = demo.match_token(token)
    print(f"{token:10s} -> entry {winner[min(cats)]}")
