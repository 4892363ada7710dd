#!/usr/bin/env python3
"""Independent Porter (1980) stemmer used to derive the pinned vectors in
test_stemmer.cpp. Written directly from the published rule tables; kept
separate from the C++ implementation so the two can disagree loudly.

Usage: porter_oracle.py word...        -> prints "word stem" per line
       porter_oracle.py --selfcheck    -> runs the canonical examples
"""
import sys

VOWELS = set("aeiou")


def is_cons(w, i):
    c = w[i]
    if c in VOWELS:
        return False
    if c == "y":
        return True if i == 0 else not is_cons(w, i - 1)
    return True


def measure(stem):
    m = 0
    i = 0
    n = len(stem)
    while i < n and is_cons(stem, i):
        i += 1
    while i < n:
        while i < n and not is_cons(stem, i):
            i += 1
        if i == n:
            break
        m += 1
        while i < n and is_cons(stem, i):
            i += 1
    return m


def has_vowel(stem):
    return any(not is_cons(stem, i) for i in range(len(stem)))


def ends_double_cons(w):
    return len(w) >= 2 and w[-1] == w[-2] and is_cons(w, len(w) - 1)


def ends_cvc(w):
    if len(w) < 3:
        return False
    if not is_cons(w, len(w) - 3) or is_cons(w, len(w) - 2) or not is_cons(w, len(w) - 1):
        return False
    return w[-1] not in "wxy"


def step1a(w):
    if w.endswith("sses"):
        return w[:-2]
    if w.endswith("ies"):
        return w[:-2]
    if w.endswith("ss"):
        return w
    if w.endswith("s"):
        return w[:-1]
    return w


def step1b(w):
    if w.endswith("eed"):
        return w[:-1] if measure(w[:-3]) > 0 else w
    fired = None
    if w.endswith("ed") and has_vowel(w[:-2]):
        fired = w[:-2]
    elif w.endswith("ing") and has_vowel(w[:-3]):
        fired = w[:-3]
    if fired is None:
        return w
    w = fired
    if w.endswith(("at", "bl", "iz")):
        return w + "e"
    if ends_double_cons(w) and w[-1] not in "lsz":
        return w[:-1]
    if measure(w) == 1 and ends_cvc(w):
        return w + "e"
    return w


def step1c(w):
    if w.endswith("y") and has_vowel(w[:-1]):
        return w[:-1] + "i"
    return w


STEP2 = [("ational", "ate"), ("tional", "tion"), ("enci", "ence"), ("anci", "ance"),
         ("izer", "ize"), ("abli", "able"), ("alli", "al"), ("entli", "ent"),
         ("eli", "e"), ("ousli", "ous"), ("ization", "ize"), ("ation", "ate"),
         ("ator", "ate"), ("alism", "al"), ("iveness", "ive"), ("fulness", "ful"),
         ("ousness", "ous"), ("aliti", "al"), ("iviti", "ive"), ("biliti", "ble")]

STEP3 = [("icate", "ic"), ("ative", ""), ("alize", "al"), ("iciti", "ic"),
         ("ical", "ic"), ("ful", ""), ("ness", "")]

STEP4 = ["al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement",
         "ment", "ent", "ou", "ism", "ate", "iti", "ous", "ive", "ize"]


def longest_rule(w, rules, min_m):
    best = None
    for frm, to in rules:
        if w.endswith(frm) and (best is None or len(frm) > len(best[0])):
            best = (frm, to)
    if best is None:
        return w
    stem = w[: len(w) - len(best[0])]
    if measure(stem) > min_m:
        return stem + best[1]
    return w


def step4(w):
    best = None
    for s in STEP4:
        if w.endswith(s) and (best is None or len(s) > len(best)):
            best = s
    if w.endswith("ion") and (best is None or len(best) < 3):
        stem = w[:-3]
        if stem and stem[-1] in "st" and measure(stem) > 1:
            return stem
        return w
    if best is None:
        return w
    stem = w[: len(w) - len(best)]
    return stem if measure(stem) > 1 else w


def step5a(w):
    if not w.endswith("e"):
        return w
    stem = w[:-1]
    m = measure(stem)
    if m > 1 or (m == 1 and not ends_cvc(stem)):
        return stem
    return w


def step5b(w):
    if w.endswith("l") and ends_double_cons(w) and measure(w) > 1:
        return w[:-1]
    return w


def stem(word):
    w = word
    if len(w) <= 2 or not w.isalpha() or not w.islower():
        return w
    w = step1a(w)
    w = step1b(w)
    w = step1c(w)
    w = longest_rule(w, STEP2, 0)
    w = longest_rule(w, STEP3, 0)
    w = step4(w)
    w = step5a(w)
    w = step5b(w)
    return w


# Per-step example transformations published with the original algorithm
# description ("X -> Y" tables under each step), plus full-pipeline sequences
# the description walks through end to end.
PER_STEP = {
    "1a": (step1a, {"caresses": "caress", "ponies": "poni", "ties": "ti",
                    "caress": "caress", "cats": "cat"}),
    "1b": (step1b, {"feed": "feed", "agreed": "agree", "plastered": "plaster",
                    "bled": "bled", "motoring": "motor", "sing": "sing",
                    "conflated": "conflate", "troubled": "trouble", "sized": "size",
                    "hopping": "hop", "tanned": "tan", "falling": "fall",
                    "hissing": "hiss", "fizzed": "fizz", "failing": "fail",
                    "filing": "file"}),
    "1c": (step1c, {"happy": "happi", "sky": "sky"}),
    "2": (lambda w: longest_rule(w, STEP2, 0),
          {"relational": "relate", "conditional": "condition", "rational": "rational",
           "valenci": "valence", "hesitanci": "hesitance", "digitizer": "digitize",
           "conformabli": "conformable", "radicalli": "radical",
           "differentli": "different", "vileli": "vile", "analogousli": "analogous",
           "vietnamization": "vietnamize", "predication": "predicate",
           "operator": "operate", "feudalism": "feudal", "decisiveness": "decisive",
           "hopefulness": "hopeful", "callousness": "callous", "formaliti": "formal",
           "sensitiviti": "sensitive", "sensibiliti": "sensible"}),
    "3": (lambda w: longest_rule(w, STEP3, 0),
          {"triplicate": "triplic", "formative": "form", "formalize": "formal",
           "electriciti": "electric", "electrical": "electric", "hopeful": "hope",
           "goodness": "good"}),
    "4": (step4,
          {"revival": "reviv", "allowance": "allow", "inference": "infer",
           "airliner": "airlin", "gyroscopic": "gyroscop", "adjustable": "adjust",
           "defensible": "defens", "irritant": "irrit", "replacement": "replac",
           "adjustment": "adjust", "dependent": "depend", "adoption": "adopt",
           "homologou": "homolog", "communism": "commun", "activate": "activ",
           "angulariti": "angular", "homologous": "homolog", "effective": "effect",
           "bowdlerize": "bowdler"}),
    "5a": (step5a, {"probate": "probat", "rate": "rate", "cease": "ceas"}),
    "5b": (step5b, {"controll": "control", "roll": "roll"}),
}

FULL_PIPELINE = {
    "generalizations": "gener", "oscillators": "oscil",
    "connect": "connect", "connected": "connect", "connecting": "connect",
    "connection": "connect", "connections": "connect",
}


def selfcheck():
    bad = 0
    total = 0
    for name, (fn, table) in PER_STEP.items():
        for w, want in table.items():
            total += 1
            got = fn(w)
            if got != want:
                print(f"MISMATCH step {name} {w}: got {got}, want {want}")
                bad += 1
    for w, want in FULL_PIPELINE.items():
        total += 1
        got = stem(w)
        if got != want:
            print(f"MISMATCH full {w}: got {got}, want {want}")
            bad += 1
    print(f"{total - bad}/{total} canonical examples match")
    return bad


if __name__ == "__main__":
    if len(sys.argv) > 1 and sys.argv[1] == "--selfcheck":
        sys.exit(1 if selfcheck() else 0)
    for word in sys.argv[1:]:
        print(word, stem(word))
