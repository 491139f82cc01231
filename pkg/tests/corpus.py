"""Frozen 50-string corpus used by the round-trip and CLI golden tests.

The first eight entries are the worked examples exercised throughout the
test suite (composition, symmetric action, bar-insertion composition); the
rest is a fixed diverse sample of filtration-2 strings over at most three
labels.
"""

CORPUS = [
    "(1u2|1u4u231||u2u4)^o",
    "(1u3|21u3|u31)^o",
    "(12u4|1u632u451||u42u6)^o",
    "(1u2|3u211||u21)^o",
    "(2u3|1u322||u32)^o",
    "(1u21)^o",
    "(1u312)^o",
    "(12u32)^o",
    "(u12||2)^o",
    "(12|2331|)^c",
    "(223113||)^o",
    "(313||223)^o",
    "(33312|2|)^c",
    "(22|331|3)^o",
    "(1123|3|2)^o",
    "(211233|)^o",
    "(3|31223)^o",
    "(313|22|3)^o",
    "(|u3u3u2|u2u1u1)^o",
    "(|3322u1|3)^o",
    "(33|3|221)^c",
    "(21|33|12)^c",
    "(2|23|331)^c",
    "(322u1|3|3)^o",
    "(|321233|)^c",
    "(231|132|)^o",
    "(|11322|3)^c",
    "(333|1|22)^c",
    "(u2u1|)^o",
    "(322|3u13|)^o",
    "(1322|31|)^c",
    "(332|1|23)^c",
    "(u2|u1|u3)^o",
    "(3||13322)^c",
    "(|223|311)^c",
    "(|332|123)^o",
    "(|332|u1u12)^o",
    "(322|3|11)^o",
    "(3|u13322|)^o",
    "(||11)^c",
    "(|22|u1)^o",
    "(32|2|331)^o",
    "(3223|11)^o",
    "(1|332|21)^o",
    "(23332|u1|)^o",
    "(|3|3322u1)^o",
    "(|23u133|2)^o",
    "(113|223)^o",
    "(312|233)^o",
    "(133|22|1)^c",
]
