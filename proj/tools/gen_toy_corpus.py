#!/usr/bin/env python3
"""Generates the bundled toy corpus under data/toy/.

Three categories (code, english, multilingual), several subsets each, one
document per file. Output is fully determined by --seed, so the committed
files can be regenerated bit-for-bit.
"""

import argparse
import itertools
import json
import random
from pathlib import Path

NOUNS = """data value index count result item node buffer config user name path size
total list key cache request response token line file error state model batch score
offset limit query record entry field column row table graph edge weight label target
source stream chunk block frame packet message header payload session client server
handler event queue task worker job metric sample vector matrix tensor layer""".split()

VERBS = """get set load save parse build create update delete find compute process handle
read write send receive merge split filter sort encode decode validate convert apply
reset init start stop run check count collect flush fetch resolve render""".split()

ADJ = """new old max min first last next prev total raw clean valid local global
default current final temp base""".split()


_CUM = {}


def zipf_choice(rng, items, s=1.1):
    key = (id(items), s)
    if key not in _CUM:
        _CUM[key] = list(itertools.accumulate(1.0 / (i + 1) ** s for i in range(len(items))))
    return rng.choices(items, cum_weights=_CUM[key], k=1)[0]


SYLLABLES = [c + v for c in "bcdfghklmnprstvwz" for v in "aeiou"] + \
    ["ch", "sh", "th", "qu", "tr", "pl", "st", "ex", "in", "on", "ar"]
SUFFIXES = ["er", "ing", "ed", "s", "ion", "ly", "or", "al", "ity", "x"]


def make_lexicon(seed, n=3000):
    """Pronounceable pseudo-words standing in for project-specific names."""
    r = random.Random(seed)
    words = set()
    while len(words) < n:
        w = "".join(r.choice(SYLLABLES) for _ in range(r.choice([2, 2, 3, 3, 4])))
        if r.random() < 0.3:
            w += r.choice(SUFFIXES)
        words.add(w)
    words = sorted(words)
    r.shuffle(words)
    return words


LEXICON = make_lexicon(7)


def noun(rng):
    if rng.random() < 0.45:
        return zipf_choice(rng, LEXICON, 0.7)
    return zipf_choice(rng, NOUNS)


def ident(rng, style="snake"):
    parts = [zipf_choice(rng, ADJ)] if rng.random() < 0.3 else []
    parts.append(noun(rng))
    if rng.random() < 0.25:
        parts.append(noun(rng))
    if style == "snake":
        return "_".join(parts)
    return parts[0] + "".join(p.capitalize() for p in parts[1:])


def func_name(rng, style="snake"):
    verb = zipf_choice(rng, VERBS)
    obj = noun(rng)
    if style == "snake":
        return f"{verb}_{obj}"
    return verb + obj.capitalize()


def number(rng):
    r = rng.random()
    if r < 0.5:
        return str(rng.randint(0, 10))
    if r < 0.8:
        return str(rng.choice([16, 32, 64, 100, 128, 256, 512, 1000, 1024, 4096]))
    if r < 0.9:
        return str(rng.randint(0, 100000))
    return f"{rng.random() * 10:.{rng.randint(1, 3)}f}"


def english_phrase(rng, n=None):
    n = n or rng.randint(3, 8)
    return " ".join(zipf_choice(rng, WORDS) for _ in range(n))


# --------------------------------------------------------------------- python


def py_expr(rng, names):
    r = rng.random()
    a = rng.choice(names)
    if r < 0.2:
        return f"{a} + {number(rng)}"
    if r < 0.35:
        return f"len({a})"
    if r < 0.5:
        return f"{func_name(rng)}({a})"
    if r < 0.6:
        return f"np.{rng.choice(['mean', 'sum', 'max', 'array', 'zeros'])}({a})"
    if r < 0.7:
        return f"[x * {number(rng)} for x in {a}]"
    if r < 0.8:
        return f'f"{{{a}}} {english_phrase(rng, 2)}"'
    if r < 0.9:
        return f"self.{ident(rng)}"
    return f"{a}.{rng.choice(['get', 'pop', 'copy', 'items', 'keys'])}()"


def py_block(rng, names, depth, indent):
    pad = " " * (4 * indent)
    lines = []
    for _ in range(rng.randint(2, 5)):
        r = rng.random()
        if r < 0.3:
            new = ident(rng)
            lines.append(f"{pad}{new} = {py_expr(rng, names)}")
            names = names + [new]
        elif r < 0.45 and depth < 2:
            it = rng.choice(["i", "j", "item", "row", "key"])
            lines.append(f"{pad}for {it} in range({rng.choice(names + [number(rng)])}):")
            lines.append(f"{pad}    {rng.choice(names)}.append(str({it}))")
            lines += py_block(rng, names + [it], depth + 1, indent + 1)[: rng.randint(0, 2)]
        elif r < 0.6 and depth < 2:
            a = rng.choice(names)
            lines.append(f"{pad}if {a} is None or {a} > {number(rng)}:")
            lines += py_block(rng, names, depth + 1, indent + 1)
            if rng.random() < 0.4:
                lines.append(f"{pad}else:")
                lines.append(f"{pad}    {a} = {py_expr(rng, names)}")
        elif r < 0.7:
            lines.append(f"{pad}# {english_phrase(rng)}")
        elif r < 0.8:
            lines.append(f"{pad}print({py_expr(rng, names)})")
        elif r < 0.9:
            lines.append(f"{pad}{rng.choice(names)}.{func_name(rng)}({py_expr(rng, names)})")
        else:
            lines.append(f"{pad}assert {rng.choice(names)} is not None, \"{english_phrase(rng, 3)}\"")
    return lines


def python_doc(rng, target):
    out = []
    imports = ["import os", "import sys", "import numpy as np", "import json",
               "from typing import List, Optional", "import re", "from collections import defaultdict"]
    out += rng.sample(imports, rng.randint(2, 5))
    out.append("")
    size = sum(len(x) + 1 for x in out)
    while size < target:
        block = ["", ""]
        if rng.random() < 0.3:
            cls = "".join(p.capitalize() for p in ident(rng).split("_"))
            block.append(f"class {cls}:")
            block.append(f'    """{english_phrase(rng).capitalize()}."""')
            block.append("")
            block.append("    def __init__(self, " + ident(rng) + "):")
            block.append(f"        self.{ident(rng)} = {number(rng)}")
            indent = 1
        else:
            indent = 0
        args = [ident(rng) for _ in range(rng.randint(1, 3))]
        pad = " " * (4 * indent)
        block.append(f"{pad}def {func_name(rng)}({'self, ' if indent else ''}{', '.join(args)}):")
        block.append(f'{pad}    """{english_phrase(rng).capitalize()}."""')
        block += py_block(rng, args, 0, indent + 1)
        block.append(f"{pad}    return {py_expr(rng, args)}")
        out += block
        size += sum(len(x) + 1 for x in block)
    return "\n".join(out) + "\n"


# ------------------------------------------------------------------------ cpp


def cpp_block(rng, names, depth, indent):
    pad = "  " * indent
    lines = []
    for _ in range(rng.randint(2, 5)):
        r = rng.random()
        a = rng.choice(names)
        if r < 0.3:
            new = ident(rng)
            ty = rng.choice(["int", "auto", "std::size_t", "double", "const auto&"])
            lines.append(f"{pad}{ty} {new} = {a}.{rng.choice(['size()', 'front()', 'back()', 'empty()'])};")
            names = names + [new]
        elif r < 0.45 and depth < 2:
            lines.append(f"{pad}for (std::size_t i = 0; i < {a}.size(); ++i) {{")
            lines.append(f"{pad}  {rng.choice(names)}.push_back({a}[i] * {number(rng)});")
            lines += cpp_block(rng, names, depth + 1, indent + 1)[: rng.randint(0, 2)]
            lines.append(f"{pad}}}")
        elif r < 0.6 and depth < 2:
            lines.append(f"{pad}if ({a} == nullptr || {a}->{ident(rng)} > {number(rng)}) {{")
            lines += cpp_block(rng, names, depth + 1, indent + 1)
            lines.append(f"{pad}}}")
        elif r < 0.7:
            lines.append(f"{pad}// {english_phrase(rng)}")
        elif r < 0.85:
            lines.append(f"{pad}{a}.{func_name(rng, 'camel')}({rng.choice(names)}, {number(rng)});")
        else:
            lines.append(f'{pad}std::cout << "{english_phrase(rng, 3)}" << {a} << std::endl;')
    return lines


def cpp_doc(rng, target):
    out = ["#include <" + h + ">" for h in rng.sample(
        ["vector", "string", "iostream", "map", "memory", "algorithm", "cstdint", "unordered_map"],
        rng.randint(2, 5))]
    out += ["", f"namespace {zipf_choice(rng, NOUNS)} {{", ""]
    size = sum(len(x) + 1 for x in out)
    while size < target:
        args = [ident(rng) for _ in range(rng.randint(1, 3))]
        ret = rng.choice(["void", "int", "bool", "std::string", "std::vector<int>"])
        params = ", ".join(f"{rng.choice(['const std::vector<int>&', 'int', 'Node*', 'std::string&'])} {a}"
                           for a in args)
        block = [f"// {english_phrase(rng).capitalize()}.",
                 f"{ret} {func_name(rng, 'camel')}({params}) {{"]
        block += cpp_block(rng, args, 0, 1)
        block.append(f"  return {rng.choice(args)};" if ret != "void" else "  return;")
        block += ["}", ""]
        out += block
        size += sum(len(x) + 1 for x in block)
    out.append("}  // namespace")
    return "\n".join(out) + "\n"


# ----------------------------------------------------------------- javascript


def js_block(rng, names, depth, indent):
    pad = "\t" * indent
    lines = []
    for _ in range(rng.randint(2, 5)):
        r = rng.random()
        a = rng.choice(names)
        if r < 0.3:
            new = ident(rng, "camel")
            lines.append(f"{pad}const {new} = {a}.{rng.choice(['map', 'filter', 'find'])}((x) => x.{ident(rng, 'camel')} > {number(rng)});")
            names = names + [new]
        elif r < 0.45 and depth < 2:
            lines.append(f"{pad}for (let i = 0; i < {a}.length; i++) {{")
            lines.append(f"{pad}\t{rng.choice(names)}.push({a}[i]);")
            lines += js_block(rng, names, depth + 1, indent + 1)[: rng.randint(0, 2)]
            lines.append(f"{pad}}}")
        elif r < 0.6 and depth < 2:
            lines.append(f"{pad}if (!{a} || {a}.length === {number(rng)}) {{")
            lines += js_block(rng, names, depth + 1, indent + 1)
            lines.append(f"{pad}}}")
        elif r < 0.7:
            lines.append(f"{pad}// {english_phrase(rng)}")
        elif r < 0.85:
            lines.append(f"{pad}await this.{func_name(rng, 'camel')}({a}, '{zipf_choice(rng, NOUNS)}');")
        else:
            lines.append(f"{pad}console.log(`{english_phrase(rng, 2)} ${{{a}}}`);")
    return lines


def js_doc(rng, target):
    out = [f"import {{ {func_name(rng, 'camel')} }} from './{zipf_choice(rng, NOUNS)}.js';"
           for _ in range(rng.randint(1, 4))]
    out.append("")
    size = sum(len(x) + 1 for x in out)
    while size < target:
        args = [ident(rng, "camel") for _ in range(rng.randint(1, 3))]
        block = ["/**", f" * {english_phrase(rng).capitalize()}.", " */",
                 f"export async function {func_name(rng, 'camel')}({', '.join(args)}) {{"]
        block += js_block(rng, args, 0, 1)
        block.append(f"\treturn {rng.choice(args)};")
        block += ["}", ""]
        out += block
        size += sum(len(x) + 1 for x in block)
    return "\n".join(out) + "\n"


# -------------------------------------------------------------------- english

WORDS = """the of and to a in is it that was he for on are with as his they be at one
have this from or had by word but what some we can out other were all there when up use
your how said an each she which do their time if will way about many then them write
would like so these her long make thing see him two has look more day could go come did
number sound no most people my over know water than call first who may down side been now
find any new work part take get place made live where after back little only round man
year came show every good me give our under name very through just form sentence great
think say help low line differ turn cause much mean before move right boy old too same tell
does set three want air well also play small end put home read hand port large spell add
even land here must big high such follow act why ask men change went light kind off need
house picture try us again animal point mother world near build self earth father head
stand own page should country found answer school grow study still learn plant cover food
sun four between state keep eye never last let thought city tree cross farm hard start
might story saw far sea draw left late run while press close night real life few north
open seem together next white children begin got walk example ease paper group always
music those both mark often letter until mile river car feet care second book carry took
science eat room friend began idea fish mountain stop once base hear horse cut sure watch
color face wood main enough plain girl usual young ready above ever red list though feel
talk bird soon body dog family direct pose leave song measure door product black short
numeral class wind question happen complete ship area half rock order fire south problem
piece told knew pass since top whole king space heard best hour better true during hundred
five remember step early hold west ground interest reach fast verb sing listen six table
travel less morning ten simple several vowel toward war lay against pattern slow center
love person money serve appear road map rain rule govern pull cold notice voice unit power
town fine certain fly fall lead cry dark machine note wait plan figure star box noun field
rest correct able pound done beauty drive stood contain front teach week final gave green
quick develop ocean warm free minute strong special mind behind clear tail produce fact
street inch multiply nothing course stay wheel full force blue object decide surface deep
moon island foot system busy test record boat common gold possible plane stead dry wonder
laugh thousand ago ran check game shape equate miss brought heat snow tire bring yes
distant fill east paint language among""".split()

NAMES = ["Anna", "Tom", "Maria", "James", "Lena", "Omar", "Sara", "Peter", "Yuki", "Noah"]
CONTRACTIONS = ["don't", "it's", "I'm", "we're", "they've", "you'll", "she'd", "can't", "won't", "I've"]


def sentence(rng):
    words = [zipf_choice(rng, WORDS, 0.9) for _ in range(rng.randint(5, 16))]
    if rng.random() < 0.3:
        words.insert(rng.randint(0, len(words)), rng.choice(NAMES))
    if rng.random() < 0.15:
        words.insert(rng.randint(0, len(words)), str(rng.choice([1999, 2022, 12, 3, 450, 1000])))
    if rng.random() < 0.3:
        words.insert(rng.randint(1, len(words)), words.pop(rng.randrange(len(words))) + ",")
    s = " ".join(words)
    return s[0].upper() + s[1:] + rng.choice([".", ".", ".", "!", "?"])


def prose_doc(rng, target):
    paras = []
    size = 0
    while size < target:
        p = " ".join(sentence(rng) for _ in range(rng.randint(3, 7)))
        paras.append(p)
        size += len(p) + 2
    return "\n\n".join(paras) + "\n"


def dialogue_doc(rng, target):
    lines = []
    size = 0
    while size < target:
        who = rng.choice(NAMES)
        s = sentence(rng)
        if rng.random() < 0.5:
            s = rng.choice(CONTRACTIONS).capitalize() + " " + s[0].lower() + s[1:]
        line = f"\"{s}\" {who} said."
        if rng.random() < 0.3:
            line += " " + sentence(rng)
        lines.append(line)
        size += len(line) + 1
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------- multilingual

FRENCH = """le la les de des un une et est dans que qui pour pas sur avec il elle nous vous
ils sont était être avoir fait plus tout bien très mais comme nous aussi où après ville
maison temps jour année monde vie homme femme enfant école travail pays histoire eau
été déjà même première grande petite français général système région siècle église
château rivière musique théâtre société économie développement gouvernement""".split()
GERMAN = """der die das und ist nicht ein eine zu den mit sich von auf für dem im des auch
es an als wie bei nach aus wird werden wurde sind war hat haben noch über zwischen Stadt
Jahr Zeit Land Welt Haus Kinder Schule Arbeit Geschichte Wasser größte Straße schön
Mädchen Gemeinde Bevölkerung Entwicklung Regierung Universität Kirche Fluss Musik""".split()
RUSSIAN = """и в не на я что тот быть с он а весь это как она по но они к у мы этот из за
который вы так же от сказать для год мочь человек о один еще бы такой только себя свой
город страна время жизнь работа история вода школа дом мир река музыка правительство
университет население развитие область район церковь""".split()
CHINESE = list("的一是不了在人有我他这个们中来上大为和国地到以说时要就出会可也你对生能"
               "而子那得于着下自之年过发后作里用道行所然家种事成方多经么去法学如都同现当没"
               "动面起看定天分还进好小部其些主样理心她本前开但因只从想实日军者意无力它与长把"
               "机十民第公此已工使情明性知全三又关点正业外将两高间由问很最重并物手应战向头文"
               "体政美相见被利什二等产或新己制身果加西斯月话合回特代内信表化老给世位次度门任"
               "常先海通教儿原东声提立及比员解水名真论处走义各入几口认条平系气题活尔更别打女变")


def spaced_doc(rng, words, target, period=". "):
    out = []
    size = 0
    while size < target:
        n = rng.randint(6, 16)
        s = " ".join(zipf_choice(rng, words, 0.9) for _ in range(n))
        s = s[0].upper() + s[1:] + "."
        out.append(s)
        size += len(s) + 1
        if rng.random() < 0.2:
            out.append("\n\n")
    return " ".join(out).replace(" \n\n ", "\n\n") + "\n"


def chinese_doc(rng, target):
    out = []
    size = 0
    while size < target:
        clauses = []
        for _ in range(rng.randint(1, 3)):
            clauses.append("".join(zipf_choice(rng, CHINESE, 0.8) for _ in range(rng.randint(4, 12))))
        s = "，".join(clauses) + rng.choice(["。", "。", "！", "？"])
        out.append(s)
        size += len(s)
        if rng.random() < 0.15:
            out.append("\n")
    return "".join(out) + "\n"


SUBSETS = {
    "code": {
        "python": (".py", python_doc, 6000),
        "cpp": (".cpp", cpp_doc, 6000),
        "javascript": (".js", js_doc, 6000),
    },
    "english": {
        "prose": (".txt", prose_doc, 6000),
        "dialogue": (".txt", dialogue_doc, 6000),
    },
    "multilingual": {
        "french": (".txt", lambda r, t: spaced_doc(r, FRENCH, t), 4000),
        "german": (".txt", lambda r, t: spaced_doc(r, GERMAN, t), 4000),
        "russian": (".txt", lambda r, t: spaced_doc(r, RUSSIAN, t), 3000),
        "chinese": (".txt", chinese_doc, 1500),
    },
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "data" / "toy")
    ap.add_argument("--seed", type=int, default=20240131)
    ap.add_argument("--files", type=int, default=40)
    ap.add_argument("--holdout", type=int, default=8)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    manifest = {"version": 1, "categories": {}}
    for category, subsets in SUBSETS.items():
        manifest["categories"][category] = {}
        for subset, (ext, gen, size) in subsets.items():
            d = args.out / category / subset
            d.mkdir(parents=True, exist_ok=True)
            for old in d.glob("*"):
                old.unlink()
            for i in range(args.files):
                target = int(size * rng.uniform(0.5, 1.5))
                (d / f"doc{i:03d}{ext}").write_text(gen(rng, target), encoding="utf-8")
            manifest["categories"][category][subset] = {
                "files": [f"{category}/{subset}/*{ext}"],
                "holdout": args.holdout,
            }
    (args.out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
