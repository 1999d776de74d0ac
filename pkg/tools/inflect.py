"""Small rule-based English inflector for asset and corpus generation."""

VOWELS = "aeiou"
SIBILANT_ENDINGS = ("s", "x", "z", "ch", "sh")


def pluralize(noun: str, irregular: dict | None = None) -> str:
    if irregular and noun in irregular:
        return irregular[noun]
    if noun.endswith("y") and len(noun) > 1 and noun[-2] not in VOWELS:
        return noun[:-1] + "ies"
    if noun.endswith(SIBILANT_ENDINGS):
        return noun + "es"
    return noun + "s"


def _doubles_final(verb: str) -> bool:
    # CVC with a final consonant that doubles before -ing/-ed.
    if len(verb) < 3:
        return False
    a, b, c = verb[-3], verb[-2], verb[-1]
    return (
        a not in VOWELS
        and b in VOWELS
        and c not in VOWELS
        and c not in "wxy"
    )


def present_participle(verb: str) -> str:
    if verb.endswith("ie"):
        return verb[:-2] + "ying"
    if verb.endswith("e") and not verb.endswith("ee"):
        return verb[:-1] + "ing"
    if _doubles_final(verb):
        return verb + verb[-1] + "ing"
    return verb + "ing"


def past_tense(verb: str, irregular: dict | None = None) -> str:
    if irregular and verb in irregular:
        return irregular[verb]
    if verb.endswith("e"):
        return verb + "d"
    if verb.endswith("y") and len(verb) > 1 and verb[-2] not in VOWELS:
        return verb[:-1] + "ied"
    if _doubles_final(verb):
        return verb + verb[-1] + "ed"
    return verb + "ed"


def third_person(verb: str) -> str:
    if verb in ("have",):
        return "has"
    if verb in ("do", "go"):
        return verb + "es"
    return pluralize(verb)


def comparative(adj: str) -> str:
    if adj.endswith("y") and len(adj) > 1 and adj[-2] not in VOWELS:
        return adj[:-1] + "ier"
    if adj.endswith("e"):
        return adj + "r"
    if _doubles_final(adj) and len(adj) <= 5:
        return adj + adj[-1] + "er"
    return adj + "er"


def superlative(adj: str) -> str:
    comp = comparative(adj)
    if comp.endswith("er"):
        return comp[:-2] + "est"
    return adj + "est"
