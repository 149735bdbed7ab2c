"""Source of truth for the requirement catalog; serialized to resources/catalog.json.

Edit here and re-run scripts/build_catalog.py rather than editing the JSON.
"""

R = []

def req(rid, code, cat, mandatory, text, refs, check, frame=None, note=None):
    entry = {
        "id": rid, "code": code, "category": cat, "mandatory": mandatory,
        "text": text, "gdpr_refs": refs, "check": check,
    }
    if frame is not None:
        entry["frame"] = frame
    if note is not None:
        entry["note"] = note
    R.append(entry)

def fr(predicate, phrase, args, negated=False):
    return {
        "predicate": predicate, "phrase": phrase, "negated": negated,
        "args": [{"role": r, "text": t} for r, t in args],
    }

# --- metadata (identity + word-overlap checks) -------------------------------
req("R1", "MD1", "MD", True,
    "The DPA shall contain at least one controller's identity and contact details.",
    ["Linklaters LLP"], "identity")
req("R2", "MD2", "MD", True,
    "The DPA shall contain at least one processor's identity and contact details.",
    ["Linklaters LLP"], "identity")
req("R3", "MD3", "MD", True,
    "The DPA shall contain the duration of the processing.",
    ["Art. 28(3)"], "lesk")
req("R4", "MD4", "MD", True,
    "The DPA shall contain the nature and purpose of the processing.",
    ["Art. 28(3)"], "lesk")
req("R5", "MD5", "MD", True,
    "The DPA shall contain the types of personal data.",
    ["Art. 28(3)"], "lesk")
req("R6", "MD6", "MD", True,
    "The DPA shall contain the categories of data subjects.",
    ["Art. 28(3)"], "lesk")

# --- mandatory processor obligations -----------------------------------------
req("R7", "PO1", "PO", True,
    "The processor shall not engage a sub-processor without a prior specific or general written "
    "authorization of the controller.",
    ["Art. 28(2)"], "frame",
    fr(["engage"], "not engage", [
        ("actor", "the processor"),
        ("object", "a sub-processor"),
        ("constraint", "without prior specific or general written approval of the controller"),
        ("time", "prior specific or general written approval"),
    ], negated=True))
req("R8", "PO2", "PO", True,
    "In case of general written authorization, the processor shall inform the controller of any "
    "intended changes concerning the addition or replacement of sub-processors.",
    ["Art. 28(2)"], "frame",
    fr(["inform"], "inform", [
        ("actor", "the processor"),
        ("beneficiary", "the controller"),
        ("object", "any intended changes"),
        ("situation", "the addition or replacement of sub-processors"),
        ("condition", "in case of written authorization"),
    ]))
req("R9", "PO3", "PO", True,
    "The processor shall process personal data only on documented instructions from the controller.",
    ["Art. 28(3)(a)"], "frame",
    fr(["process"], "process", [
        ("actor", "the processor"),
        ("object", "personal data"),
        ("constraint", "on documented instructions from the controller"),
    ]))
req("R10", "PO4", "PO", True,
    "If the processor requires by Union or Member State law to process personal data without "
    "instructions and law does not prohibit informing the controller on grounds of public interest, "
    "the processor shall inform the controller of that legal requirement before processing.",
    ["Art. 28(3)(a)"], "frame",
    fr(["inform"], "inform", [
        ("actor", "the processor"),
        ("object", "that legal requirement"),
        ("beneficiary", "the controller"),
        ("condition", "If the processor requires by Union or Member State law to process personal "
         "data without instructions and law does not prohibit informing the controller on grounds "
         "of public interest"),
        ("time", "before processing"),
        ("reference", "Union or Member State law"),
    ]))
req("R11", "PO5", "PO", True,
    "The processor shall ensure that persons authorized to process personal data have committed "
    "themselves to confidentiality or are under an appropriate statutory obligation of confidentiality.",
    ["Art. 28(3)(b)"], "frame",
    fr(["ensure"], "ensure", [
        ("actor", "the processor"),
        ("object", "persons"),
        ("situation", "have committed themselves to confidentiality"),
        ("constraint", "are under an appropriate statutory obligation of confidentiality"),
    ]))
req("R12", "PO6", "PO", True,
    "The processor shall take all measures required pursuant to Article 32 or to ensure the "
    "security of processing.",
    ["Art. 28(3)(c)"], "frame",
    fr(["take"], "take", [
        ("actor", "the processor"),
        ("object", "all measures"),
        ("reference", "Article 32"),
        ("reason", "to ensure the security of processing"),
    ]))
req("R13", "PO7", "PO", True,
    "The processor shall assist the controller in fulfilling its obligation to respond to requests "
    "for exercising the data subject's rights.",
    ["Art. 28(3)(e)"], "frame",
    fr(["assist"], "assist", [
        ("actor", "the processor"),
        ("beneficiary", "the controller"),
        ("object", "in fulfilling its obligation"),
        ("reason", "to respond to requests for exercising the data subject's rights"),
        ("situation", "requests"),
    ]))
req("R14", "PO8", "PO", True,
    "The processor shall assist the controller in ensuring the security of processing.",
    ["Art. 28(3)(f)", "Art. 32"], "frame",
    fr(["assist"], "assist", [
        ("actor", "the processor"),
        ("beneficiary", "the controller"),
        ("object", "in ensuring the security of processing"),
    ]))
req("R15", "PO9", "PO", True,
    "The processor shall assist the controller in notifying a personal data breach to the "
    "supervisory authority.",
    ["Art. 28(3)(f)", "Art. 33"], "frame",
    fr(["assist"], "assist", [
        ("actor", "the processor"),
        ("beneficiary", "the controller"),
        ("object", "in notifying to the supervisory authority"),
        ("situation", "a personal data breach"),
    ]))
req("R16", "PO10", "PO", True,
    "The processor shall assist the controller in communicating a personal data breach to the "
    "data subject.",
    ["Art. 28(3)(f)", "Art. 34"], "frame",
    fr(["assist"], "assist", [
        ("actor", "the processor"),
        ("beneficiary", "the controller"),
        ("object", "in communicating to the data subject"),
        ("situation", "a personal data breach"),
    ]))
req("R17", "PO11", "PO", True,
    "The processor shall assist the controller in ensuring compliance with the obligations "
    "pursuant to data protection impact assessment (DPIA).",
    ["Art. 28(3)(f)", "Art. 35"], "frame",
    fr(["assist"], "assist", [
        ("actor", "the processor"),
        ("beneficiary", "the controller"),
        ("object", "in ensuring compliance with the obligations pursuant to data protection "
         "impact assessment (DPIA)"),
    ]))
req("R18", "PO12", "PO", True,
    "The processor shall assist the controller in consulting the supervisory authorities prior to "
    "processing where the processing would result in a high risk in the absence of measures taken "
    "by the controller to mitigate the risk.",
    ["Art. 28(3)(f)", "Art. 36"], "frame",
    fr(["assist"], "assist", [
        ("actor", "the processor"),
        ("beneficiary", "the controller"),
        ("object", "in consulting the supervisory authorities"),
        ("time", "prior to processing"),
        ("reason", "to mitigate the risk"),
        ("constraint", "where the processing would result in a high risk in the absence of "
         "measures taken by the controller"),
    ]))
req("R19", "PO13", "PO", True,
    "The processor shall return or delete all personal data to the controller after the end of "
    "the provision of services relating to processing.",
    ["Art. 28(3)(g)"], "frame",
    fr(["return", "delete"], "return or delete", [
        ("actor", "the processor"),
        ("object", "all personal data"),
        ("beneficiary", "the controller"),
        ("time", "after | end"),
        ("situation", "the end of the provision of services related to processing"),
    ]))
req("R20", "PO14", "PO", True,
    "The processor shall immediately inform the controller if an instruction infringes the GDPR "
    "or other data protection provisions.",
    ["Art. 28(3)(h)"], "frame",
    fr(["inform"], "inform", [
        ("actor", "the processor"),
        ("beneficiary", "the controller"),
        ("condition", "if an instruction infringes the GDPR or other data protection provisions"),
        ("reference", "GDPR or other data protection provisions"),
    ]))
req("R21", "PO15", "PO", True,
    "The processor shall make available to the controller information necessary to demonstrate "
    "compliance with the obligations Article 28 in GDPR.",
    ["Art. 28(3)(h)"], "frame",
    fr(["make"], "make available", [
        ("actor", "the processor"),
        ("beneficiary", "the controller"),
        ("object", "information necessary to demonstrate compliance with the obligations"),
        ("reference", "Article 28 in GDPR"),
    ]))
req("R22", "PO16", "PO", True,
    "The processor shall allow for and contribute to audits, including inspections, conducted by "
    "the controller or another auditor mandated by the controller.",
    ["Art. 28(3)(h)"], "frame",
    fr(["allow", "contribute"], "allow for and contribute to", [
        ("actor", "the processor"),
        ("object", "audits including inspections"),
        ("situation", "conducted by the controller or another auditor mandated by the controller"),
    ]))
req("R23", "PO17", "PO", True,
    "The processor shall impose the same obligations on the engaged sub-processors by way of "
    "contract or other legal act under Union or Member State law.",
    ["Art. 28(4)"], "frame",
    fr(["impose"], "impose", [
        ("actor", "the processor"),
        ("beneficiary", "the engaged sub-processors"),
        ("object", "the same obligations"),
        ("constraint", "by way of contract or other legal act under"),
        ("reference", "Union or Member State law"),
    ]))
req("R24", "PO18", "PO", True,
    "The processor shall remain fully liable to the controller for the performance of "
    "sub-processor's obligations.",
    ["Art. 28(4)"], "frame",
    fr(["remain"], "remain fully liable", [
        ("actor", "the processor"),
        ("beneficiary", "the controller"),
        ("object", "for the performance of sub-processor's obligations"),
    ]))
req("R25", "PO19", "PO", True,
    "When assessing the level of security, the processor shall take into account the risk of "
    "accidental or unlawful destruction, loss, alternation, unauthorized disclosure of or access "
    "to the personal data transmitted, stored or processed.",
    ["Art. 32(2)"], "frame",
    fr(["take"], "take into account", [
        ("actor", "the processor"),
        ("object", "the risk of"),
        ("situation", "accidental or unlawful destruction, loss, alternation, unauthorized "
         "disclosure of or access to the personal data transmitted, stored or processed"),
    ]))
req("R26", "CR1", "CR", True,
    "In case of general written authorization, the controller shall have the right to object to "
    "changes concerning the addition or replacement of sub-processors, after having been informed "
    "of such intended changes by the processor.",
    ["Art. 8(2)"], "frame",
    fr(["have"], "have the right", [
        ("actor", "the controller"),
        ("object", "to object to changes"),
        ("condition", "in case of written authorization"),
        ("constraint", "by the processor"),
        ("time", "after having been informed of such intended changes"),
        ("situation", "addition or replacement of sub-processors"),
    ]),
    note="Reference printed as Art. 8(2) in the source table; Art. 28(2) is the likely intent.")

# --- optional metadata --------------------------------------------------------
req("R27", "MD7", "MD", False,
    "The organizational and technical measures to ensure a level of security can include: (a) "
    "pseudonymization and encryption of personal data, (b) ensure confidentiality, integrity, "
    "availability and resilience of processing systems and services, (c) restore the availability "
    "and access to personal data in a timely manner in the event of a physical or technical "
    "incident, and (d) regularly testing, assessing and evaluating the effectiveness of technical "
    "and organizational measures for ensuring the security of the processing.",
    ["Art. 32(1)"], "lesk")
req("R28", "MD8", "MD", False,
    "The notification of personal data breach shall at least include (a) the nature of personal "
    "data breach; (b) the name and contact details of the data protection officer; (c) the "
    "consequences of the breach; (d) the measures taken or proposed to mitigate its effects.",
    ["Art. 33(3)"], "lesk")
req("R29", "MD9", "MD", False,
    "The DPIA shall at least include (a) a systematic description of the envisaged processing "
    "operations and the purposes of the processing, (b) an assessment of the necessity and "
    "proportionality of the processing operations in relation to the purposes, (c) an assessment "
    "of the risks to the rights and freedoms of data subjects, and (d) the measures envisaged to "
    "address the risks.",
    ["Art. 35(7)"], "lesk")

# --- optional processor obligations -------------------------------------------
req("R30", "PO20", "PO", False,
    "The processor shall not transfer personal data to a third country or international "
    "organization without a prior specific or general authorization of the controller.",
    ["Art. 28(3)(a)"], "frame",
    fr(["transfer"], "not transfer", [
        ("actor", "the processor"),
        ("beneficiary", "a third country or international organization"),
        ("object", "personal data"),
        ("constraint", "without a prior specific or general authorization of the controller"),
        ("time", "prior specific or general authorization"),
    ], negated=True))
req("R31", "PO21", "PO", False,
    "The processor can demonstrate guarantees to Article 28 (1-4) through adherence to an "
    "approved codes of conduct or an approved certification mechanism.",
    ["Art. 28(5)"], "frame",
    fr(["demonstrate"], "demonstrate", [
        ("actor", "the processor"),
        ("object", "guarantees"),
        ("situation", "adherence to an approved code of conduct or an approved certification mechanism"),
        ("reference", "Article 28 (1-4)"),
    ]))
req("R32", "PO22", "PO", False,
    "The processor shall implement appropriate technical and organizational measures to ensure a "
    "level of security appropriate to the risk of varying likelihood and severity for the rights "
    "and freedoms of natural persons.",
    ["Art. 32(1)"], "frame",
    fr(["implement"], "implement", [
        ("actor", "the processor"),
        ("object", "appropriate technical and organizational measures"),
        ("reason", "to ensure a level of security appropriate to the risk"),
        ("situation", "varying likelihood and severity for the rights and freedoms of natural persons"),
    ]))
req("R33", "PO23", "PO", False,
    "The processor shall ensure that any natural person acting under its authority who has access "
    "to personal data only process them on instructions from the controller.",
    ["Art. 32(4)"], "frame",
    fr(["ensure"], "ensure", [
        ("actor", "the processor"),
        ("beneficiary", "any person"),
        ("constraint", "under its authority who has access to personal data acts only on "
         "instructions from the controller"),
        ("situation", "access to personal data"),
    ]))
req("R34", "PO24", "PO", False,
    "The processor shall notify the controller without undue delay after becoming aware of a "
    "personal data breach.",
    ["Art. 33(2)"], "frame",
    fr(["notify"], "notify", [
        ("actor", "the processor"),
        ("beneficiary", "the controller"),
        ("constraint", "without undue delay"),
        ("situation", "a data breach"),
    ]))
req("R35", "PO25", "PO", False,
    "A processor shall be liable for the damage caused by processing only where it has not "
    "complied with GDPR obligations specifically directed to processors or where it has acted "
    "outside or contrary to lawful instructions of the controller.",
    ["Art. 82(2)"], "frame",
    fr(["be", "liable"], "be liable", [
        ("actor", "a processor"),
        ("object", "for the damage caused"),
        ("condition", "where acting outside or contrary to lawful instructions of the controller "
         "or not complying with obligations of the GDPR specifically directed to processors"),
        ("constraint", "by processing"),
    ]))

# --- controller obligations ----------------------------------------------------
req("R36", "CO1", "CO", False,
    "The controller shall inform the supervisory authority no later than 72 hours after having "
    "become aware of a personal data breach.",
    ["Art. 33(1)"], "frame",
    fr(["inform"], "inform", [
        ("actor", "the controller"),
        ("beneficiary", "the supervisory authority"),
        ("time", "no later than 72 hours after having become aware"),
        ("situation", "a personal data breach"),
    ]))
req("R37", "CO2", "CO", False,
    "The controller shall document personal data breaches.",
    ["Art. 33(5)"], "frame",
    fr(["document"], "document", [
        ("actor", "the controller"),
        ("object", "personal data breaches"),
    ]))
req("R38", "CO3", "CO", False,
    "In case of high risks, the controller shall communicate the data breach to the data subject "
    "without undue delay.",
    ["Art. 34(1)"], "frame",
    fr(["inform"], "inform", [
        ("actor", "the controller"),
        ("beneficiary", "the data subject"),
        ("condition", "in case of high risks"),
        ("constraint", "without undue delay"),
        ("situation", "a data breach"),
    ]))
req("R39", "CO4", "CO", False,
    "The controller shall carry out a DPIA.",
    ["Art. 35(1)"], "frame",
    fr(["carry"], "carry out", [
        ("actor", "the controller"),
        ("object", "DPIA"),
    ]))
req("R40", "CO5", "CO", False,
    "The controller shall seek advice of the DPO when carrying a DPIA.",
    ["Art. 35(2)"], "frame",
    fr(["seek"], "seek", [
        ("actor", "the controller"),
        ("object", "advice of the DPO"),
        ("condition", "when carrying out DPIA"),
    ]))
req("R41", "CO6", "CO", False,
    "The controller shall seek the views of data subjects or their representatives on the "
    "intended processing.",
    ["Art. 35(9)"], "frame",
    fr(["seek"], "seek", [
        ("actor", "the controller"),
        ("object", "the views of data subjects or their representatives on the intended processing"),
    ]))
req("R42", "CO7", "CO", False,
    "The controller shall carry out a review to assess if processing is performed in accordance "
    "with the data protection impact assessment at least when there is a change of the risk "
    "represented by processing operations.",
    ["Art. 35(11)"], "frame",
    fr(["carry"], "carry out", [
        ("actor", "the controller"),
        ("object", "a review"),
        ("condition", "at least when there exists"),
        ("constraint", "represented by processing operations"),
        ("reason", "to assess if processing is performed in accordance with the DPIA"),
        ("situation", "a change of the risk"),
    ]))
req("R43", "CO8", "CO", False,
    "A controller shall be liable for the damage caused by any processing infringing the GDPR.",
    ["Art. 82(2)"], "frame",
    fr(["be", "liable"], "be liable", [
        ("actor", "a controller"),
        ("object", "for the damage"),
        ("constraint", "caused by any processing infringing the GDPR"),
        ("reference", "GDPR"),
    ]))

# --- controller rights ----------------------------------------------------------
req("R44", "CR2", "CR", False,
    "The controller shall have the right to suspend the processing in certain cases.",
    ["Linklaters LLP"], "frame",
    fr(["have"], "have the right", [
        ("actor", "the controller"),
        ("object", "to suspend the processing"),
        ("condition", "in certain cases"),
    ]))
req("R45", "CR3", "CR", False,
    "The controller shall have the right to terminate the DPA in certain cases.",
    ["Linklaters LLP"], "frame",
    fr(["have"], "have the right", [
        ("actor", "the controller"),
        ("object", "to terminate"),
        ("condition", "in certain cases"),
        ("reference", "the DPA"),
    ]))

GLOSSARY = [
    ("Personal Data", "Any information relating to an identified or identifiable natural person (data subject).", "Art. 4(1)"),
    ("Processing", "Any operation or set of operations which is performed on personal data or on sets of personal data, whether or not by automated means, such as collection, recording, organization, structuring, storage, adaptation or alteration, retrieval, consultation, use, disclosure by transmission, dissemination or otherwise making available, alignment or combination, restriction, erasure or destruction.", "Art. 4(2)"),
    ("Pseudonymization", "The processing of personal data in such a manner that the personal data can no longer be attributed to a specific data subject without the use of additional information, provided that such additional information is kept separately and is subject to technical and organizational measures to ensure that the personal data are not attributed to an identified or identifiable natural person.", "Art. 4(5)"),
    ("Data Controller", "A natural or legal person, public authority, agency or other body which, alone or jointly with others, determines the purposes and means of the processing of personal data; where the purposes and means of such processing are determined by Union or Member State law, the controller or the specific criteria for its nomination may be provided for by Union or Member State law.", "Art. 4(7)"),
    ("Data Processor", "A natural or legal person, public authority, agency or other body which processes personal data on behalf of the controller.", "Art. 4(8)"),
    ("Personal Data Breach", "A breach of security leading to the accidental or unlawful destruction, loss, alteration, unauthorized disclosure of, or access to, personal data transmitted, stored or otherwise processed.", "Art. 4(12)"),
    ("Supervisory Authority", "A supervisory authority which is concerned by the processing of personal data because the controller or processor is established on the territory of the Member State of that supervisory authority; data subjects residing in the Member State of that supervisory authority are substantially affected or likely to be substantially affected by the processing; or a complaint has been lodged with that supervisory authority.", "Art. 4(22)"),
    ("Objection", "An objection to a draft decision as to whether there is an infringement of this Regulation, or whether envisaged action in relation to the controller or processor complies with this Regulation, which clearly demonstrates the significance of the risks posed by the draft decision as regards the fundamental rights and freedoms of data subjects and, where applicable, the free flow of personal data within the Union.", "Art. 4(24)"),
    ("International Organization", "An organization and its subordinate bodies governed by public international law, or any other body which is set up by, or on the basis of, an agreement between two or more countries.", "Art. 4(26)"),
    ("Sub-processor", "A natural person or organization engaged by a Processor for carrying out specific processing activities on behalf of the Controller.", "Art. 28(4)"),
    ("Security of Processing", "Taking into account the state of the art, the costs of implementation and the nature, scope, context and purposes of processing as well as the risk of varying likelihood and severity for the rights and freedoms of natural persons, the controller and the processor shall implement appropriate technical and organizational measures to ensure a level of security appropriate to the risk.", "Art. 32(1)"),
    ("Data Protection Impact Assessment", "An assessment of the necessity and proportionality of the processing operations in relation to the purposes, considering the risks to the rights, freedoms and legitimate interests of data subjects (abbreviated as DPIA).", "Art. 35(7)"),
    ("Codes of Conduct", "Are intended to contribute to the proper application of this Regulation, taking account of the specific features of the various processing sectors and the specific needs of micro, small and medium-sized enterprises.", "Art. 40(1)"),
    ("Certification", "The establishment of data protection certification mechanisms and of data protection seals and marks, for the purpose of demonstrating compliance with this Regulation of processing operations by controllers and processors. The specific needs of micro, small and medium-sized enterprises shall be taken into account.", "Art. 42(1)"),
    ("Personal Data Transfer", "A transfer of personal data to a third country or an international organization may take place where the Commission has decided that the third country, a territory or one or more specified sectors within that third country, or the international organization in question ensures an adequate level of protection.", "Art. 45(1)"),
]
