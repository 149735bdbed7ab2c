"""Hand-built dependency parses for the committed test fixtures.

Each sentence is a list of (surface, lemma, upos, head, deprel) tuples,
1-based heads, exactly one root. Serialized to tests/fixtures/*.conllu by
build_fixtures.py; edit here and regenerate.
"""

# 13-statement excerpt exercising identity, word-overlap and frame checks.
# Controller: Sefer University (a.k.a. Company); processor: Levico Accounting
# GmbH (a.k.a. Levico).
FIG1 = [
    # S1: identities and contact details of both parties
    [
        ("This", "this", "DET", 4, "det"),
        ("Data", "data", "NOUN", 4, "compound"),
        ("Processing", "processing", "NOUN", 4, "compound"),
        ("Agreement", "agreement", "NOUN", 6, "nsubj:pass"),
        ("is", "be", "AUX", 6, "aux:pass"),
        ("concluded", "conclude", "VERB", 0, "root"),
        ("between", "between", "ADP", 9, "case"),
        ("Sefer", "Sefer", "PROPN", 9, "compound"),
        ("University", "University", "PROPN", 6, "obl"),
        (",", ",", "PUNCT", 11, "punct"),
        ("located", "locate", "VERB", 9, "acl"),
        ("at", "at", "ADP", 15, "case"),
        ("2", "2", "NUM", 15, "nummod"),
        ("Alley", "Alley", "PROPN", 15, "compound"),
        ("Street", "Street", "PROPN", 11, "obl"),
        (",", ",", "PUNCT", 18, "punct"),
        ("10557", "10557", "NUM", 18, "nummod"),
        ("Tbilisi", "Tbilisi", "PROPN", 15, "appos"),
        (",", ",", "PUNCT", 23, "punct"),
        ("and", "and", "CCONJ", 23, "cc"),
        ("Levico", "Levico", "PROPN", 23, "compound"),
        ("Accounting", "Accounting", "PROPN", 23, "compound"),
        ("GmbH", "GmbH", "PROPN", 9, "conj"),
        (",", ",", "PUNCT", 25, "punct"),
        ("located", "locate", "VERB", 23, "acl"),
        ("at", "at", "ADP", 27, "case"),
        ("Hauptstrasse", "Hauptstrasse", "PROPN", 25, "obl"),
        ("18", "18", "NUM", 27, "nummod"),
        (",", ",", "PUNCT", 31, "punct"),
        ("80331", "80331", "NUM", 31, "nummod"),
        ("Munich", "Munich", "PROPN", 27, "appos"),
        (".", ".", "PUNCT", 6, "punct"),
    ],
    # S2
    [
        ("Sefer", "Sefer", "PROPN", 2, "compound"),
        ("University", "University", "PROPN", 4, "nsubj:pass"),
        ("is", "be", "AUX", 4, "aux:pass"),
        ("referred", "refer", "VERB", 0, "root"),
        ("to", "to", "ADP", 4, "compound:prt"),
        ("as", "as", "ADP", 8, "case"),
        ("the", "the", "DET", 8, "det"),
        ("Company", "Company", "PROPN", 4, "obl"),
        ("and", "and", "CCONJ", 10, "cc"),
        ("acts", "act", "VERB", 4, "conj"),
        ("as", "as", "ADP", 14, "case"),
        ("the", "the", "DET", 14, "det"),
        ("data", "data", "NOUN", 14, "compound"),
        ("controller", "controller", "NOUN", 10, "obl"),
        (".", ".", "PUNCT", 4, "punct"),
    ],
    # S3
    [
        ("Levico", "Levico", "PROPN", 3, "compound"),
        ("Accounting", "Accounting", "PROPN", 3, "compound"),
        ("GmbH", "GmbH", "PROPN", 4, "nsubj"),
        ("acts", "act", "VERB", 0, "root"),
        ("as", "as", "ADP", 8, "case"),
        ("the", "the", "DET", 8, "det"),
        ("data", "data", "NOUN", 8, "compound"),
        ("processor", "processor", "NOUN", 4, "obl"),
        ("on", "on", "ADP", 10, "case"),
        ("behalf", "behalf", "NOUN", 4, "obl"),
        ("of", "of", "ADP", 13, "case"),
        ("the", "the", "DET", 13, "det"),
        ("Company", "Company", "PROPN", 10, "nmod"),
        (".", ".", "PUNCT", 4, "punct"),
    ],
    # S4
    [
        ("This", "this", "DET", 2, "det"),
        ("agreement", "agreement", "NOUN", 3, "nsubj"),
        ("governs", "govern", "VERB", 0, "root"),
        ("the", "the", "DET", 5, "det"),
        ("processing", "processing", "NOUN", 3, "obj"),
        ("of", "of", "ADP", 8, "case"),
        ("personal", "personal", "ADJ", 8, "amod"),
        ("data", "data", "NOUN", 5, "nmod"),
        ("that", "that", "PRON", 11, "obj"),
        ("Levico", "Levico", "PROPN", 11, "nsubj"),
        ("performs", "perform", "VERB", 8, "acl:relcl"),
        ("for", "for", "ADP", 14, "case"),
        ("the", "the", "DET", 14, "det"),
        ("Company", "Company", "PROPN", 11, "obl"),
        (".", ".", "PUNCT", 3, "punct"),
    ],
    # S5: satisfies the no-sub-processor-without-authorization obligation
    [
        ("Levico", "Levico", "PROPN", 4, "nsubj"),
        ("shall", "shall", "AUX", 4, "aux"),
        ("not", "not", "PART", 4, "advmod"),
        ("engage", "engage", "VERB", 0, "root"),
        ("any", "any", "DET", 6, "det"),
        ("sub-contractor", "sub-contractor", "NOUN", 4, "obj"),
        ("without", "without", "ADP", 11, "case"),
        ("a", "a", "DET", 11, "det"),
        ("prior", "prior", "ADJ", 11, "amod"),
        ("written", "write", "ADJ", 11, "amod"),
        ("authorization", "authorization", "NOUN", 4, "obl"),
        ("of", "of", "ADP", 14, "case"),
        ("the", "the", "DET", 14, "det"),
        ("Company", "Company", "PROPN", 11, "nmod"),
        (".", ".", "PUNCT", 4, "punct"),
    ],
    # S6: processing only on documented purpose (maps to the instructions obligation)
    [
        ("Levico", "Levico", "PROPN", 3, "compound"),
        ("Accounting", "Accounting", "PROPN", 3, "compound"),
        ("GmbH", "GmbH", "PROPN", 4, "nsubj"),
        ("processes", "process", "VERB", 0, "root"),
        ("Company", "Company", "PROPN", 7, "compound"),
        ("personal", "personal", "ADJ", 7, "amod"),
        ("data", "data", "NOUN", 4, "obj"),
        ("only", "only", "ADV", 10, "advmod"),
        ("for", "for", "SCONJ", 10, "mark"),
        ("providing", "provide", "VERB", 4, "advcl"),
        ("the", "the", "DET", 12, "det"),
        ("service", "service", "NOUN", 10, "obj"),
        ("of", "of", "ADP", 15, "case"),
        ("payroll", "payroll", "NOUN", 15, "compound"),
        ("administration", "administration", "NOUN", 12, "nmod"),
        (".", ".", "PUNCT", 4, "punct"),
    ],
    # S7: types of personal data
    [
        ("The", "the", "DET", 3, "det"),
        ("personal", "personal", "ADJ", 3, "amod"),
        ("data", "data", "NOUN", 7, "nsubj"),
        ("shared", "share", "VERB", 3, "acl"),
        ("with", "with", "ADP", 6, "case"),
        ("Levico", "Levico", "PROPN", 4, "obl"),
        ("contains", "contain", "VERB", 0, "root"),
        ("the", "the", "DET", 10, "det"),
        ("following", "following", "ADJ", 10, "amod"),
        ("types", "type", "NOUN", 7, "obj"),
        (":", ":", "PUNCT", 13, "punct"),
        ("first", "first", "ADJ", 13, "amod"),
        ("name", "name", "NOUN", 10, "appos"),
        (",", ",", "PUNCT", 16, "punct"),
        ("last", "last", "ADJ", 16, "amod"),
        ("name", "name", "NOUN", 13, "conj"),
        (",", ",", "PUNCT", 19, "punct"),
        ("birth", "birth", "NOUN", 19, "compound"),
        ("date", "date", "NOUN", 13, "conj"),
        (",", ",", "PUNCT", 22, "punct"),
        ("marital", "marital", "ADJ", 22, "amod"),
        ("status", "status", "NOUN", 13, "conj"),
        ("and", "and", "CCONJ", 26, "cc"),
        ("bank", "bank", "NOUN", 26, "compound"),
        ("account", "account", "NOUN", 26, "compound"),
        ("details", "detail", "NOUN", 13, "conj"),
        (".", ".", "PUNCT", 7, "punct"),
    ],
    # S8: sub-contractor agreements; satisfies neither the engagement nor the
    # processing-instructions obligation
    [
        ("Levico", "Levico", "PROPN", 2, "nsubj"),
        ("maintains", "maintain", "VERB", 0, "root"),
        ("a", "a", "DET", 5, "det"),
        ("written", "write", "ADJ", 5, "amod"),
        ("agreement", "agreement", "NOUN", 2, "obj"),
        ("with", "with", "ADP", 8, "case"),
        ("all", "all", "DET", 8, "det"),
        ("sub-contractors", "sub-contractor", "NOUN", 2, "obl"),
        (".", ".", "PUNCT", 2, "punct"),
    ],
    # S9: assistance with data subject requests
    [
        ("Levico", "Levico", "PROPN", 3, "nsubj"),
        ("shall", "shall", "AUX", 3, "aux"),
        ("assist", "assist", "VERB", 0, "root"),
        ("the", "the", "DET", 5, "det"),
        ("Company", "Company", "PROPN", 3, "obj"),
        ("in", "in", "SCONJ", 7, "mark"),
        ("fulfilling", "fulfil", "VERB", 3, "advcl"),
        ("its", "its", "PRON", 9, "nmod:poss"),
        ("obligation", "obligation", "NOUN", 7, "obj"),
        ("to", "to", "PART", 11, "mark"),
        ("respond", "respond", "VERB", 9, "acl"),
        ("to", "to", "ADP", 13, "case"),
        ("requests", "request", "NOUN", 11, "obl"),
        ("for", "for", "SCONJ", 15, "mark"),
        ("exercising", "exercise", "VERB", 13, "acl"),
        ("the", "the", "DET", 18, "det"),
        ("data", "data", "NOUN", 18, "compound"),
        ("subject", "subject", "NOUN", 20, "nmod:poss"),
        ("'s", "'s", "PART", 18, "case"),
        ("rights", "right", "NOUN", 15, "obj"),
        (".", ".", "PUNCT", 3, "punct"),
    ],
    # S10: security measures
    [
        ("Levico", "Levico", "PROPN", 3, "nsubj"),
        ("shall", "shall", "AUX", 3, "aux"),
        ("implement", "implement", "VERB", 0, "root"),
        ("appropriate", "appropriate", "ADJ", 8, "amod"),
        ("technical", "technical", "ADJ", 8, "amod"),
        ("and", "and", "CCONJ", 7, "cc"),
        ("organizational", "organizational", "ADJ", 5, "conj"),
        ("measures", "measure", "NOUN", 3, "obj"),
        ("to", "to", "PART", 10, "mark"),
        ("ensure", "ensure", "VERB", 3, "advcl"),
        ("the", "the", "DET", 12, "det"),
        ("security", "security", "NOUN", 10, "obj"),
        ("of", "of", "ADP", 14, "case"),
        ("processing", "processing", "NOUN", 12, "nmod"),
        ("in", "in", "ADP", 16, "case"),
        ("accordance", "accordance", "NOUN", 3, "obl"),
        ("with", "with", "ADP", 18, "case"),
        ("Article", "article", "NOUN", 16, "nmod"),
        ("32(1)", "32(1)", "NUM", 18, "nummod"),
        ("of", "of", "ADP", 22, "case"),
        ("the", "the", "DET", 22, "det"),
        ("GDPR", "GDPR", "PROPN", 18, "nmod"),
        (".", ".", "PUNCT", 3, "punct"),
    ],
    # S11: breach notification assistance, addressee unspecified
    [
        ("In", "in", "ADP", 2, "case"),
        ("case", "case", "NOUN", 13, "obl"),
        ("of", "of", "ADP", 7, "case"),
        ("a", "a", "DET", 7, "det"),
        ("personal", "personal", "ADJ", 7, "amod"),
        ("data", "data", "NOUN", 7, "compound"),
        ("breach", "breach", "NOUN", 2, "nmod"),
        (",", ",", "PUNCT", 13, "punct"),
        ("Levico", "Levico", "PROPN", 11, "compound"),
        ("Accounting", "Accounting", "PROPN", 11, "compound"),
        ("GmbH", "GmbH", "PROPN", 13, "nsubj"),
        ("shall", "shall", "AUX", 13, "aux"),
        ("assist", "assist", "VERB", 0, "root"),
        ("Company", "Company", "PROPN", 13, "obj"),
        ("in", "in", "SCONJ", 16, "mark"),
        ("notifying", "notify", "VERB", 13, "advcl"),
        ("the", "the", "DET", 18, "det"),
        ("breach", "breach", "NOUN", 16, "obj"),
        ("without", "without", "ADP", 21, "case"),
        ("undue", "undue", "ADJ", 21, "amod"),
        ("delay", "delay", "NOUN", 16, "obl"),
        (".", ".", "PUNCT", 13, "punct"),
    ],
    # S12: duration and termination
    [
        ("This", "this", "DET", 2, "det"),
        ("agreement", "agreement", "NOUN", 3, "nsubj"),
        ("remains", "remain", "VERB", 0, "root"),
        ("effective", "effective", "ADJ", 3, "xcomp"),
        ("for", "for", "ADP", 7, "case"),
        ("the", "the", "DET", 7, "det"),
        ("duration", "duration", "NOUN", 3, "obl"),
        ("of", "of", "ADP", 10, "case"),
        ("the", "the", "DET", 10, "det"),
        ("processing", "processing", "NOUN", 7, "nmod"),
        ("and", "and", "CCONJ", 12, "cc"),
        ("terminates", "terminate", "VERB", 3, "conj"),
        ("if", "if", "SCONJ", 16, "mark"),
        ("the", "the", "DET", 15, "det"),
        ("Company", "Company", "PROPN", 16, "nsubj"),
        ("terminates", "terminate", "VERB", 12, "advcl"),
        ("the", "the", "DET", 18, "det"),
        ("agreement", "agreement", "NOUN", 16, "obj"),
        (".", ".", "PUNCT", 3, "punct"),
    ],
    # S13: return or deletion at the end of the services
    [
        ("Upon", "upon", "ADP", 2, "case"),
        ("termination", "termination", "NOUN", 9, "obl"),
        ("of", "of", "ADP", 5, "case"),
        ("any", "any", "DET", 5, "det"),
        ("services", "service", "NOUN", 2, "nmod"),
        (",", ",", "PUNCT", 9, "punct"),
        ("Levico", "Levico", "PROPN", 9, "nsubj"),
        ("shall", "shall", "AUX", 9, "aux"),
        ("return", "return", "VERB", 0, "root"),
        ("or", "or", "CCONJ", 11, "cc"),
        ("delete", "delete", "VERB", 9, "conj"),
        ("all", "all", "DET", 14, "det"),
        ("personal", "personal", "ADJ", 14, "amod"),
        ("data", "data", "NOUN", 9, "obj"),
        ("after", "after", "ADP", 17, "case"),
        ("the", "the", "DET", 17, "det"),
        ("end", "end", "NOUN", 9, "obl"),
        ("of", "of", "ADP", 20, "case"),
        ("the", "the", "DET", 20, "det"),
        ("provision", "provision", "NOUN", 17, "nmod"),
        ("of", "of", "ADP", 22, "case"),
        ("services", "service", "NOUN", 20, "nmod"),
        (".", ".", "PUNCT", 9, "punct"),
    ],
]

# The sub-contracting statement from the worked matching example: the
# predicate matches via the enriched verb, the actor and object overlap, the
# restriction and its time qualifier are absent.
TABLE5 = [
    [
        ("Levico", "Levico", "PROPN", 3, "compound"),
        ("Accounting", "Accounting", "PROPN", 3, "compound"),
        ("GmbH", "GmbH", "PROPN", 5, "nsubj"),
        ("can", "can", "AUX", 5, "aux"),
        ("employ", "employ", "VERB", 0, "root"),
        ("sub-contractors", "sub-contractor", "NOUN", 5, "obj"),
        ("for", "for", "ADP", 9, "case"),
        ("the", "the", "DET", 9, "det"),
        ("performance", "performance", "NOUN", 5, "obl"),
        ("of", "of", "ADP", 12, "case"),
        ("the", "the", "DET", 12, "det"),
        ("service", "service", "NOUN", 9, "nmod"),
        ("of", "of", "ADP", 14, "case"),
        ("Levico", "Levico", "PROPN", 16, "nmod:poss"),
        ("'s", "'s", "PART", 14, "case"),
        ("obligations", "obligation", "NOUN", 12, "nmod"),
        (".", ".", "PUNCT", 5, "punct"),
    ],
]

# Colon lead-in plus bullet items, for list merging.
LIST_MERGE = [
    [
        ("Levico", "Levico", "PROPN", 2, "nsubj"),
        ("shall", "shall", "AUX", 0, "root"),
        (":", ":", "PUNCT", 2, "punct"),
    ],
    [
        ("impose", "impose", "VERB", 0, "root"),
        ("the", "the", "DET", 4, "det"),
        ("same", "same", "ADJ", 4, "amod"),
        ("obligations", "obligation", "NOUN", 1, "obj"),
        ("on", "on", "ADP", 8, "case"),
        ("the", "the", "DET", 8, "det"),
        ("engaged", "engage", "ADJ", 8, "amod"),
        ("sub-processors", "sub-processor", "NOUN", 1, "obl"),
        (";", ";", "PUNCT", 1, "punct"),
    ],
    [
        ("transfer", "transfer", "VERB", 0, "root"),
        ("only", "only", "ADV", 4, "advmod"),
        ("necessary", "necessary", "ADJ", 4, "amod"),
        ("data", "data", "NOUN", 1, "obj"),
        (";", ";", "PUNCT", 1, "punct"),
    ],
    [
        ("ensure", "ensure", "VERB", 0, "root"),
        ("the", "the", "DET", 3, "det"),
        ("security", "security", "NOUN", 1, "obj"),
        ("of", "of", "ADP", 7, "case"),
        ("the", "the", "DET", 7, "det"),
        ("shared", "share", "ADJ", 7, "amod"),
        ("data", "data", "NOUN", 3, "nmod"),
        (";", ";", "PUNCT", 1, "punct"),
    ],
    [
        ("remain", "remain", "VERB", 0, "root"),
        ("fully", "fully", "ADV", 3, "advmod"),
        ("liable", "liable", "ADJ", 1, "xcomp"),
        ("to", "to", "ADP", 6, "case"),
        ("the", "the", "DET", 6, "det"),
        ("Company", "Company", "PROPN", 3, "obl"),
        (".", ".", "PUNCT", 1, "punct"),
    ],
]
