#!/usr/bin/env python3
"""Generate the word-list assets bundled with the package.

Writes tagger lexicon files, the nonce exclusion list, and the category
lexicon under src/cpicurate/assets/. Run from the repository root after
editing tools/wordbank.py.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import inflect
import wordbank

ASSETS = Path(__file__).resolve().parent.parent / "src" / "cpicurate" / "assets"


def write_list(name: str, words) -> None:
    path = ASSETS / name
    uniq = sorted(set(words))
    path.write_text("\n".join(uniq) + "\n", encoding="utf-8")
    print(f"{name}: {len(uniq)} entries")


def main() -> None:
    ASSETS.mkdir(parents=True, exist_ok=True)

    category_pairs = []
    seen = set()
    for category, words in wordbank.CATEGORY_NOUNS.items():
        for w in words:
            s = wordbank.alias(w)
            if s not in seen:
                seen.add(s)
                category_pairs.append((s, category))

    nouns = [w for w, _ in category_pairs]
    nouns += wordbank.surface_set(wordbank.GENERAL_NOUNS)
    nouns += sorted(set(wordbank.IRREGULAR_PLURALS.values()))
    verbs = wordbank.surface_set(wordbank.VERBS)
    verbs += sorted(set(wordbank.IRREGULAR_PASTS.values()))
    adjectives = wordbank.surface_set(wordbank.ADJECTIVES)

    write_list("nouns.txt", nouns)
    write_list("verbs.txt", verbs)
    write_list("adjectives.txt", adjectives)
    write_list("determiners.txt", wordbank.surface_set(wordbank.DETERMINERS))
    write_list("prepositions.txt", wordbank.surface_set(wordbank.PREPOSITIONS))
    write_list("pronouns.txt", wordbank.surface_set(wordbank.PRONOUNS))
    write_list("function_words.txt", wordbank.surface_set(wordbank.FUNCTION_WORDS))

    # Exclusion list: every surface form plus regular inflections, so nonce
    # candidates that accidentally spell a real word are rejected.
    exclusion = set()
    exclusion.update(nouns, verbs, adjectives)
    exclusion.update(wordbank.surface_set(wordbank.DETERMINERS))
    exclusion.update(wordbank.surface_set(wordbank.PREPOSITIONS))
    exclusion.update(wordbank.surface_set(wordbank.PRONOUNS))
    exclusion.update(wordbank.surface_set(wordbank.FUNCTION_WORDS))
    for n in list(nouns):
        exclusion.add(inflect.pluralize(n, wordbank.IRREGULAR_PLURALS))
    for v in list(verbs):
        exclusion.add(inflect.present_participle(v))
        exclusion.add(inflect.past_tense(v, wordbank.IRREGULAR_PASTS))
        exclusion.add(inflect.third_person(v))
    for a in list(adjectives):
        exclusion.add(inflect.comparative(a))
        exclusion.add(inflect.superlative(a))
        exclusion.add(a + "ly" if not a.endswith("y") else a[:-1] + "ily")
    write_list("exclusion_words.txt", exclusion)

    cat_path = ASSETS / "categories.tsv"
    lines = [f"{w}\t{c}" for w, c in sorted(category_pairs)]
    cat_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"categories.tsv: {len(lines)} entries, "
          f"{len(set(c for _, c in category_pairs))} categories")


if __name__ == "__main__":
    main()
