"""Build the case fixture JSON files.

Development-time helper: assembles the recorded case data (conics, closed
forms for t, region claims, expected solution lists, golden coordinates)
into the JSON files the pipeline loads.  Everything written here is
re-verified at run time; this script just fixes the shape of the record.
"""

import json
import pathlib

FIX = pathlib.Path(__file__).resolve().parents[1] / "src/quadtoric/pipeline/fixtures"


def sc(poly, subs, claim, band):  # plain sign certificate
    return {"technique": "signs", "poly": poly, "substitutions": subs, "claim": claim, "band": band}


def ec(poly, subs, eps_max, claim, band):  # epsilon-quadratic certificate
    return {
        "technique": "eps_quadratic", "poly": poly, "substitutions": subs,
        "epsilon": "e", "epsilon_max": eps_max, "claim": claim, "band": band,
    }


def cc(poly, subs, expand_var, claim, band):  # coefficientwise, definite fallback
    return {
        "technique": "coefficients_definite", "poly": poly, "substitutions": subs,
        "expand_var": expand_var, "claim": claim, "band": band,
    }


def dc(poly, var, disc_subs, claim, band):  # definite as a quadratic in `var`
    return {
        "technique": "definite_in_var", "poly": poly, "definite_var": var,
        "substitutions": disc_subs, "claim": claim, "band": band,
    }


A0_CASE_I = {
    "oracle": {"box": 400, "s_min": 1, "expected_admissible": [[0, 2], [8, 2]]},
    "cases": [
        {
            "id": "a0-082",
            "n": 0, "s": 2, "a": 0, "b": 8,
            "pell": "55*z^2-95*z*w+41*w^2+1",
            "t_formula": "330*z-270*w-6",
            "vol_quadric": "1980*z^2-13320*z*w+9756*w^2+3960*z-3240*w+1980+t^2",
            "region": {"z_max": 84, "w_max": 4},
            "expected_points": [[6, 7], [7, 8], [11, 13], [15, 17], [27, 32], [38, 43], [70, 83]],
            "notes": "the recorded list replaces the non-solution (11,12) by the actual conic point (11,13); re-substitution is checked at load time",
            "w_gt_z_claim": sc("55*z^2-95*z*w+41*w^2+1", [["w", "z-e"]], "positive", "w <= z: no conic points"),
            "denominator": "z^2-z*w+w^2+2*z+1",
            "denominator_claim": sc("z^2-z*w+w^2+2*z+1", [["w", "z+1+u"]], "positive", "w > z"),
            "branches": {
                "1": {
                    "claims": [
                        sc("55*z^2-95*z*w+41*w^2+1", [["z", "5/6*w-e"]], "positive", "z <= 5/6 w: no conic points"),
                        sc("-110*z^2-130*z*w+178*w^2-220*z+96*w-110", [["z", "5/6*w+e"]], "negative", "z >= 5/6 w: beta < 0"),
                    ],
                    "provenance": {"-110*z^2-130*z*w+178*w^2-220*z+96*w-110": ["beta", 1]},
                    "coverage": "all (z,w) with w > z > 0",
                    "expected_rejections": {},
                },
                "-1": {
                    "claims": [
                        sc("-156*z^2+72*z*w+54*w^2-144*z+126*w+12", [["z", "100/115*w+e"], ["w", "4+x"]], "negative", "w <= 1.15 z, w >= 4: width < m"),
                        ec("55*z^2-95*z*w+41*w^2+1", [["w", "(115/100+e)*z"], ["z", "84+x"]], "3/100", "negative", "1.15 z <= w <= 1.18 z, z >= 84: no conic points"),
                        ec("219*z^2-345*z*w+135*w^2+60*z-42*w+9", [["w", "(118/100+e)*z"], ["z", "84+x"]], "12/100", "negative", "1.18 z <= w <= 1.3 z, z >= 84: alpha < 0"),
                        sc("55*z^2-95*z*w+41*w^2+1", [["z", "5/6*w-e"]], "positive", "w >= 1.3 z: no conic points"),
                    ],
                    "provenance": {
                        "-156*z^2+72*z*w+54*w^2-144*z+126*w+12": ["width_skew", -1],
                        "219*z^2-345*z*w+135*w^2+60*z-42*w+9": ["alpha", -1],
                    },
                    "coverage": "z >= 85 and w >= 5",
                    "expected_rejections": {
                        "6,7": "negative-side", "7,8": "width-below-m", "11,13": "negative-side",
                        "15,17": "width-below-m", "27,32": "width-below-m", "38,43": "width-below-m",
                        "70,83": "negative-side",
                    },
                    "golden_m2_coordinates": {
                        "6,7": [[0, 0], [168, 0], [-112, -280], [5040, 5880]],
                        "7,8": [[0, 0], [288, 0], [432, 144], [7056, 8064]],
                        "11,13": [[0, 0], [204, 0], [68, -136], [15708, 18564]],
                        "15,17": [[0, 0], [1020, 0], [4820, 3800], [31500, 35700]],
                        "27,32": [[0, 0], [192, 0], [3872, 3680], [90720, 107520]],
                        "38,43": [[0, 0], [5208, 0], [38192, 32984], [197904, 223944]],
                        "70,83": [[0, 0], [-1224, 0], [36720, 37944], [599760, 711144]],
                    },
                },
            },
        },
        {
            "id": "a0-802",
            "n": 0, "s": 2, "a": 8, "b": 0,
            "pell": "55*z^2-15*z*w+w^2+1",
            "t_formula": "330*z-30*w-6",
            "vol_quadric": "1980*z^2-10440*z*w+1116*w^2+3960*z-360*w+1980+t^2",
            "region": {"z_max": 3},
            "expected_points": [[1, 7], [1, 8], [2, 13], [2, 17]],
            "w_gt_z_claim": sc("55*z^2-15*z*w+w^2+1", [["w", "z-e"]], "positive", "w <= z: no conic points"),
            "denominator": "9*z^2-9*z*w+w^2+18*z+9",
            "denominator_claim": None,
            "branches": {
                "1": {
                    "claims": [
                        sc("55*z^2-15*z*w+w^2+1", [["w", "11/3*z-e"]], "positive", "w <= 11/3 z: no conic points"),
                        ec("-165*z^2+125*z*w-13*w^2-330*z+16*w-165", [["w", "(78/10-e)*z-4"], ["z", "4+x"]], "38/10", "positive", "4 z - 4 <= w <= 7.8 z - 4, z >= 4: beta numerator > 0"),
                        ec("27*z^2-27*z*w+3*w^2+54*z+27", [["w", "(78/10-e)*z-4"], ["z", "4+x"]], "38/10", "negative", "4 z - 4 <= w <= 7.8 z - 4, z >= 4: denominator < 0"),
                        ec("55*z^2-15*z*w+w^2+1", [["w", "(78/10+e)*z-4"], ["z", "3+x"]], "6/10", "negative", "7.8 z - 4 <= w <= 8.4 z - 4, z >= 3: no conic points"),
                        cc("-165*z^2+125*z*w-13*w^2-330*z+16*w-165", [["w", "84/10*z-4+e"], ["z", "2+x"]], "e", "negative", "w >= 8.4 z - 4, z >= 2: beta numerator < 0"),
                        cc("27*z^2-27*z*w+3*w^2+54*z+27", [["w", "84/10*z-4+e"], ["z", "2+x"]], "e", "positive", "w >= 8.4 z - 4, z >= 2: denominator > 0"),
                    ],
                    "provenance": {"-165*z^2+125*z*w-13*w^2-330*z+16*w-165": ["beta", 1]},
                    "coverage": "z >= 4 (bands in w against z)",
                    "expected_rejections": {
                        "1,7": "negative-side", "1,8": "negative-side",
                        "2,13": "negative-side", "2,17": "negative-side",
                    },
                },
                "-1": {
                    "claims": [
                        sc("55*z^2-15*z*w+w^2+1", [["w", "3*z-e"]], "positive", "w <= 3 z: no conic points"),
                        ec("9*z^2-9*z*w+w^2+18*z+9", [["w", "(3+e)*z"], ["z", "3+x"]], "35/10", "negative", "3 z <= w <= 6.5 z, z >= 3: delta denominator < 0"),
                        ec("55*z^2-15*z*w+w^2+1", [["w", "(65/10+e)*z"], ["z", "3+x"]], "19/10", "negative", "6.5 z <= w <= 8.4 z, z >= 3: no conic points"),
                        ec("1734*z^2-376*z*w+20*w^2+234*z-28*w+12", [["w", "(84/10+e)*z"], ["z", "2+x"]], "6/10", "negative", "8.4 z <= w <= 9 z, z >= 2: width margin < 0"),
                        sc("55*z^2-15*z*w+w^2+1", [["w", "9*z+e"]], "positive", "w >= 9 z: no conic points"),
                        sc("210*z-14*w+42", [["w", "15*z-e"]], "positive", "w < 15 z: delta numerator > 0"),
                        sc("55*z^2-15*z*w+w^2+1", [["w", "15*z+e"]], "positive", "w >= 15 z: no conic points"),
                    ],
                    "provenance": {
                        "1734*z^2-376*z*w+20*w^2+234*z-28*w+12": ["width_steep", -1],
                        "210*z-14*w+42": ["delta", -1],
                    },
                    "coverage": "z >= 3 (bands in w against z)",
                    "expected_rejections": {
                        "1,7": "negative-side", "1,8": "negative-side",
                        "2,13": "width-below-m", "2,17": "width-below-m",
                    },
                    "golden_primitive": {
                        "2,13": {"sides": [59, 115, 6, 105],
                                 "coordinates": [[0, 0], [59, 0], [174, 1035], [210, 1365]],
                                 "width": [210, [1, 0]], "m": 285},
                    },
                },
            },
        },
    ],
}


AN_CASE_I = {
    "oracle": {"box": 400, "s_min": -2},
    "modp_rows": [
        {"n": 2, "s": -1, "a": 0, "pell": "22*z^2-34*z*w+13*w^2+3",
         "vol_quadric": "616*z^2-2184*z*w+1204*w^2+1232*z-784*w+616+t^2", "p": 13},
        {"n": 2, "s": -1, "a": 6, "pell": "22*z^2-10*z*w+w^2+3",
         "vol_quadric": "616*z^2-1512*z*w+196*w^2+1232*z-112*w+616+t^2", "p": 13},
        {"n": 3, "s": 4, "a": 1, "pell": "77*z^2-98*z*w+29*w^2+4",
         "vol_quadric": "3080*z^2-25480*z*w+11240*w^2+6160*z-2800*w+3080+t^2", "p": 7},
        {"n": 3, "s": 4, "a": 4, "pell": "77*z^2-56*z*w+8*w^2+4",
         "vol_quadric": "3080*z^2-23800*z*w+4520*w^2+6160*z-1120*w+3080+t^2", "p": 7},
        {"n": 4, "s": -1, "a": 1, "pell": "22*z^2-26*z*w+7*w^2+5",
         "vol_quadric": "704*z^2-2240*z*w+800*w^2+1408*z-512*w+704+t^2", "p": 7},
        {"n": 4, "s": -1, "a": 3, "pell": "22*z^2-18*z*w+3*w^2+5",
         "vol_quadric": "704*z^2-1984*z*w+416*w^2+1408*z-256*w+704+t^2", "p": 7},
        {"n": 4, "s": 0, "a": 2, "pell": "33*z^2-33*z*w+7*w^2+5",
         "vol_quadric": "1188*z^2-4752*z*w+1332*w^2+2376*z-648*w+1188+t^2", "p": 17},
    ],
    "degenerate_rows": [
        {
            "id": "an-100", "n": 1, "s": 0, "a": 0, "b": 7,
            "pell": "33*z^2-54*z*w+22*w^2+2",
            "t_formula": "132*z-96*w-8",
            "vol_quadric": "1056*z^2-4896*z*w+3104*w^2+2112*z-1536*w+1056+t^2",
            "region": {"z_max": 36, "w_max": 4},
            "expected_points": [[4, 5], [6, 7], [10, 13], [20, 23], [36, 47]],
            "w_gt_z_claim": sc("33*z^2-54*z*w+22*w^2+2", [["w", "z-e"]], "positive", "w <= z"),
            "branches": {
                "1": {
                    "claims": [
                        sc("-33*z^2-9*z*w+23*w^2-66*z+28*w-33", [["z", "100/135*w+e"]], "negative", "z >= 20/27 w: beta < 0"),
                        sc("33*z^2-54*z*w+22*w^2+2", [["z", "100/135*w-e"]], "positive", "z <= 20/27 w: no conic points"),
                    ],
                    "provenance": {"-33*z^2-9*z*w+23*w^2-66*z+28*w-33": ["beta", 1]},
                    "coverage": "all (z,w) with w > z > 0",
                    "expected_rejections": {
                        "4,5": "negative-side", "6,7": "negative-side", "10,13": "negative-side",
                        "20,23": "negative-side", "36,47": "negative-side"},
                },
                "-1": {
                    "claims": [
                        sc("-58*z^2+8*z*w+32*w^2-46*z+40*w+12", [["z", "10/12*w+e"], ["w", "4+x"]], "negative", "w <= 1.2 z, w >= 4: width < m"),
                        ec("33*z^2-54*z*w+22*w^2+2", [["w", "(12/10+e)*z"], ["z", "11+x"]], "1/10", "negative", "1.2 z <= w <= 1.3 z, z >= 11: no conic points"),
                        ec("98*z^2-138*z*w+48*w^2+36*z-20*w+8", [["w", "(13/10+e)*z"], ["z", "37+x"]], "5/100", "negative", "1.3 z <= w <= 1.35 z, z >= 37: alpha < 0"),
                        sc("33*z^2-54*z*w+22*w^2+2", [["z", "100/135*w-e"]], "positive", "w >= 1.35 z: no conic points"),
                    ],
                    "provenance": {
                        "-58*z^2+8*z*w+32*w^2-46*z+40*w+12": ["width_skew", -1],
                        "98*z^2-138*z*w+48*w^2+36*z-20*w+8": ["alpha", -1],
                    },
                    "coverage": "z >= 37 and w >= 5",
                    "expected_rejections": {
                        "4,5": "negative-side", "6,7": "width-below-m", "10,13": "negative-side",
                        "20,23": "width-below-m", "36,47": "negative-side"},
                },
            },
        },
        {
            "id": "an-107", "n": 1, "s": 0, "a": 7, "b": 0,
            "pell": "33*z^2-12*z*w+w^2+2",
            "t_formula": "132*z-12*w-8",
            "vol_quadric": "1056*z^2-3552*z*w+416*w^2+2112*z-192*w+1056+t^2",
            "region": {"z_max": 3},
            "region_note": "the claim bands for the first branch are certified for z >= 4 (at z = 3 the endpoint polynomial has a positive monomial), so the enumerated strip is z <= 3 rather than z <= 2",
            "expected_points": [[1, 5], [1, 7], [3, 13], [3, 23]],
            "w_gt_z_claim": sc("33*z^2-12*z*w+w^2+2", [["w", "z-e"]], "positive", "w <= z"),
            "branches": {
                "1": {
                    "claims": [
                        sc("33*z^2-12*z*w+w^2+2", [["w", "3*z-e"]], "positive", "w <= 3 z: no conic points"),
                        ec("-132*z^2+111*z*w-13*w^2-264*z+14*w-132", [["w", "(3+e)*z"], ["z", "4+x"]], "2", "positive", "3 z <= w <= 5 z, z >= 4: beta numerator > 0"),
                        ec("32*z^2-32*z*w+4*w^2+64*z+32", [["w", "(3+e)*z"], ["z", "4+x"]], "2", "negative", "3 z <= w <= 5 z, z >= 4: denominator < 0"),
                        ec("33*z^2-12*z*w+w^2+2", [["w", "(5+e)*z"], ["z", "3+x"]], "25/10", "negative", "5 z <= w <= 7.5 z, z >= 3: no conic points"),
                        cc("-132*z^2+111*z*w-13*w^2-264*z+14*w-132", [["w", "75/10*z+e"]], "z", "negative", "w >= 7.5 z: beta numerator < 0"),
                        sc("32*z^2-32*z*w+4*w^2+64*z+32", [["w", "75/10*z+e"]], "positive", "w >= 7.5 z: denominator > 0"),
                    ],
                    "provenance": {"-132*z^2+111*z*w-13*w^2-264*z+14*w-132": ["beta", 1]},
                    "coverage": "z >= 4",
                    "expected_rejections": {
                        "1,5": "negative-side", "1,7": "negative-side",
                        "3,13": "negative-side", "3,23": "negative-side"},
                },
                "-1": {
                    "claims": [
                        sc("33*z^2-12*z*w+w^2+2", [["w", "3*z-e"]], "positive", "w <= 3 z"),
                        ec("8*z^2-8*z*w+w^2+16*z+8", [["w", "(3+e)*z"], ["z", "3+x"]], "2", "negative", "3 z <= w <= 5 z, z >= 3: delta denominator < 0"),
                        ec("33*z^2-12*z*w+w^2+2", [["w", "(5+e)*z"], ["z", "3+x"]], "25/10", "negative", "5 z <= w <= 7.5 z, z >= 3"),
                        ec("662*z^2-157*z*w+9*w^2+114*z-15*w+12", [["w", "(75/10+e)*z"], ["z", "3+x"]], "5/10", "negative", "7.5 z <= w <= 8 z, z >= 3: width margin < 0"),
                        sc("33*z^2-12*z*w+w^2+2", [["w", "8*z+e"]], "positive", "w >= 8 z: no conic points"),
                        sc("90*z-5*w+20", [["w", "8*z-e"]], "positive", "w < 8 z: delta numerator > 0"),
                    ],
                    "provenance": {"662*z^2-157*z*w+9*w^2+114*z-15*w+12": ["width_steep", -1],
                                   "90*z-5*w+20": ["delta", -1]},
                    "coverage": "z >= 3",
                    "expected_rejections": {
                        "1,5": "negative-side", "1,7": "negative-side",
                        "3,13": "negative-side", "3,23": "negative-side"},
                },
            },
        },
        {
            "id": "an-4m20", "n": 4, "s": -2, "a": 0, "b": 4,
            "pell": "11*z^2-15*z*w+5*w^2+5",
            "t_formula": "22*z-10*w-10",
            "vol_quadric": "220*z^2-520*z*w+220*w^2+440*z-200*w+220+t^2",
            "region": {"z_max": 30},
            "expected_points": [[5, 7], [5, 8], [10, 13], [10, 17], [25, 32], [25, 43]],
            "w_gt_z_claim": sc("11*z^2-15*z*w+5*w^2+5", [["w", "z-e"]], "positive", "w <= z"),
            "branches": {
                "1": {
                    "claims": [
                        ec("5*z^2-100", [["z", "4-e"]], "4", "negative", "z <= 4: the conic has negative w-discriminant"),
                        dc("-11*z^2+5*z*w-w^2-22*z+10*w-11", "w", [["z", "3+x"]], "negative", "z >= 3: beta numerator < 0 for every real w"),
                    ],
                    "provenance": {"-11*z^2+5*z*w-w^2-22*z+10*w-11": ["beta", 1]},
                    "coverage": "all z >= 0",
                    "expected_rejections": {
                        "5,7": "negative-side", "5,8": "negative-side", "10,13": "negative-side",
                        "10,17": "negative-side", "25,32": "negative-side", "25,43": "negative-side"},
                },
                "-1": {
                    "claims": [
                        ec("-6*z^2-10*z*w+10*w^2+4*z+10", [["w", "(1+e)*z"], ["z", "31+x"]], "3/10", "negative", "z <= w <= 1.3 z, z >= 31: width < m"),
                        ec("11*z^2-15*z*w+5*w^2+5", [["w", "(13/10+e)*z"], ["z", "31+x"]], "42/100", "negative", "1.3 z <= w <= 1.72 z, z >= 31"),
                        ec("21*z^2-21*z*w+5*w^2+10*z+5", [["w", "(172/100+e)*z"], ["z", "31+x"]], "28/100", "negative", "1.72 z <= w <= 2 z, z >= 31: alpha < 0"),
                        sc("11*z^2-15*z*w+5*w^2+5", [["w", "2*z+e"]], "positive", "w >= 2 z: no conic points"),
                    ],
                    "provenance": {
                        "-6*z^2-10*z*w+10*w^2+4*z+10": ["width_skew", -1],
                        "21*z^2-21*z*w+5*w^2+10*z+5": ["alpha", -1],
                    },
                    "coverage": "z >= 31",
                    "expected_rejections": {
                        "5,7": "reducible-generator", "5,8": "negative-side",
                        "10,13": "width-below-m", "10,17": "width-below-m",
                        "25,32": "width-below-m", "25,43": "width-below-m"},
                    "golden_m2_coordinates": {
                        "5,7": [[0, 0], [180, 0], [200, 20], [800, 1120]],
                        "10,17": [[0, 0], [160, 0], [320, 160], [3200, 5440]],
                        "25,43": [[0, 0], [100, 0], [2600, 2500], [20000, 34400]],
                    },
                    "reducibility": {"5,7": "poly_9_0_10_1_40_56"},
                },
            },
        },
        {
            "id": "an-4m24", "n": 4, "s": -2, "a": 4, "b": 0,
            "pell": "11*z^2-7*z*w+w^2+5",
            "t_formula": "22*z-2*w-10",
            "vol_quadric": "220*z^2-360*z*w+60*w^2+440*z-40*w+220+t^2",
            "region": {"z_max": 13},
            "expected_points": [[2, 7], [3, 8], [3, 13], [7, 17], [7, 32]],
            "w_gt_z_claim": sc("11*z^2-7*z*w+w^2+5", [["w", "z-e"]], "positive", "w <= z"),
            "branches": {
                "1": {
                    "claims": [
                        sc("11*z^2-7*z*w+w^2+5", [["w", "2*z-e"]], "positive", "w <= 2 z: no conic points"),
                        ec("-55*z^2+49*z*w-9*w^2-110*z+10*w-55", [["w", "(2+e)*z"], ["z", "14+x"]], "5/10", "positive", "2 z <= w <= 2.5 z, z >= 14: beta numerator > 0"),
                        ec("25*z^2-25*z*w+5*w^2+50*z+25", [["w", "(2+e)*z"], ["z", "14+x"]], "5/10", "negative", "2 z <= w <= 2.5 z, z >= 14: denominator < 0"),
                        ec("11*z^2-7*z*w+w^2+5", [["w", "(25/10+e)*z"], ["z", "14+x"]], "19/10", "negative", "2.5 z <= w <= 4.4 z, z >= 14"),
                        sc("-55*z^2+49*z*w-9*w^2-110*z+10*w-55", [["w", "44/10*z+e"], ["z", "14+x"]], "negative", "w >= 4.4 z, z >= 14: beta numerator < 0"),
                        sc("25*z^2-25*z*w+5*w^2+50*z+25", [["w", "44/10*z+e"], ["z", "14+x"]], "positive", "w >= 4.4 z, z >= 14: denominator > 0"),
                    ],
                    "provenance": {"-55*z^2+49*z*w-9*w^2-110*z+10*w-55": ["beta", 1]},
                    "coverage": "z >= 14",
                    "expected_rejections": {
                        "2,7": "negative-side", "3,8": "negative-side", "3,13": "negative-side",
                        "7,17": "negative-side", "7,32": "negative-side"},
                },
                "-1": {
                    "claims": [
                        sc("11*z^2-7*z*w+w^2+5", [["w", "2*z-e"]], "positive", "w <= 2 z"),
                        ec("25*z^2-25*z*w+5*w^2+50*z+25", [["w", "(2+e)*z"], ["z", "14+x"]], "5/10", "negative", "2 z <= w <= 2.5 z, z >= 14: denominator < 0"),
                        ec("11*z^2-7*z*w+w^2+5", [["w", "(25/10+e)*z"], ["z", "14+x"]], "19/10", "negative", "2.5 z <= w <= 4.4 z, z >= 14"),
                        ec("74*z^2-26*z*w+2*w^2+4*z+10", [["w", "(44/10+e)*z"], ["z", "14+x"]], "6/10", "negative", "4.4 z <= w <= 5 z, z >= 14: width margin < 0"),
                        sc("11*z^2-7*z*w+w^2+5", [["w", "5*z+e"]], "positive", "w >= 5 z: no conic points"),
                        sc("16*z", [], "positive", "delta numerator > 0"),
                    ],
                    "provenance": {"74*z^2-26*z*w+2*w^2+4*z+10": ["width_steep", -1],
                                   "16*z": ["delta", -1]},
                    "coverage": "z >= 14",
                    "expected_rejections": {
                        "2,7": "negative-side", "3,8": "width-below-m", "3,13": "reducible-generator",
                        "7,17": "width-below-m", "7,32": "width-below-m"},
                    "golden_m2_coordinates": {
                        "3,8": [[0, 0], [144, 0], [192, 240], [288, 768]],
                        "3,13": [[0, 0], [60, 0], [72, 60], [288, 1248]],
                        "7,17": [[0, 0], [812, 0], [1512, 3500], [1568, 3808]],
                    },
                    "reducibility": {"3,13": "poly_5_0_6_5_24_104"},
                },
            },
        },
    ],
    "supplementary_rows": [
        {
            "id": "an-5m21", "n": 5, "s": -2, "a": 1, "b": 2,
            "conic": "11*z^2-12*z*w+3*w^2+6",
            "note": "integral solution family of the case-I matrix system; absent from the recorded classification tables, kept here so the scan output is reproducible",
            "reducibility": {"33,85": "poly_1_0_5_8_33_85"},
        },
        {
            "id": "an-5m22", "n": 5, "s": -2, "a": 2, "b": 1,
            "conic": "11*z^2-10*z*w+2*w^2+6",
            "note": "integral solution family of the case-I matrix system; absent from the recorded classification tables",
            "reducibility": {"14,23": "poly_7_0_11_12_14_23"},
        },
    ],
}


DE_CASE = {
    "l_max": 20,
    "expected_solutions": {
        "eq1": [[1, 1, 1, 0, 4, 4, 1], [1, 1, 4, 1, 0, 7, 0], [1, 2, 2, 0, 2, 6, 0], [2, 1, 3, 0, 1, 7, 0]],
        "eq2": [[1, 1, 2, 0, 3, 5, 0], [1, 2, 1, 0, 3, 5, 1]],
    },
    "recorded_solutions": {
        "eq1": [[1, 1, 1, 0, 4, 4, 1], [1, 1, 4, 1, 0, 7, 0], [1, 2, 2, 0, 2, 6, 0]],
        "eq2": [[1, 1, 2, 0, 3, 5, 0], [1, 2, 1, 0, 3, 5, 1]],
    },
    "notes": "eq1 additionally has the E7 solution (2,1,3,0,1,7,0), absent from the recorded lists; its volume step is run like the others and rejects the family",
    "expected_family_status": {
        "eq1:1,1,1,0,4,4,1": "no-rational-root",
        "eq1:1,1,4,1,0,7,0": "no-rational-root",
        "eq1:1,2,2,0,2,6,0": "rejected",
        "eq1:2,1,3,0,1,7,0": "rejected",
        "eq2:1,1,2,0,3,5,0": "rejected",
        "eq2:1,2,1,0,3,5,1": "rejected",
    },
    "golden_words": {
        "eq1:1,1,1,0,4,4,1": {"vec": [-1, -2, -4, -2, -1, -2, -3, -1, -2, -2, -2, -2, -3], "black": [0, 4, 7, 11]},
        "eq1:1,1,4,1,0,7,0": {"vec": [-1, -2, -3, -2, -1, -3, -2, -2, -2, -1, -3, -2], "black": [0, 4, 9, 10]},
        "eq1:1,2,2,0,2,6,0": {"vec": [-1, -2, -3, -2, -2, -1, -3, -2, -1, -2, -2, -3], "black": [0, 5, 8, 11]},
        "eq2:1,1,2,0,3,5,0": {"vec": [-1, -2, -3, -2, -1, -2, -3, -1, -2, -2, -2, -3], "black": [0, 4, 7, 11]},
    },
}

A0_CASE_II = {
    "s_range": [1, 60],
    "w_range": [1, 2000],
    "table": [
        {"a": 0, "b": 8, "f": "31", "g": "81*s^4+810*s^3+2619*s^2+2970*s+1089"},
        {"a": 1, "b": 7, "f": "-8*s^2-24*s+31", "g": "256*s^4+2304*s^3+6816*s^2+7344*s+2601"},
        {"a": 2, "b": 6, "f": "-14*s^2-42*s+31", "g": "441*s^4+3822*s^3+10927*s^2+11466*s+3969"},
        {"a": 3, "b": 5, "f": "-18*s^2-54*s+31", "g": "576*s^4+4896*s^3+13716*s^2+14076*s+4761"},
        {"a": 4, "b": 4, "f": "-20*s^2-60*s+31", "g": "625*s^4+5250*s^3+14475*s^2+14490*s+4761"},
        {"a": 5, "b": 3, "f": "-20*s^2-60*s+31", "g": "576*s^4+4800*s^3+13024*s^2+12600*s+3969"},
        {"a": 6, "b": 2, "f": "-18*s^2-54*s+31", "g": "441*s^4+3654*s^3+9711*s^2+8874*s+2601"},
        {"a": 7, "b": 1, "f": "-14*s^2-42*s+31", "g": "256*s^4+2112*s^3+5412*s^2+4356*s+1089"},
        {"a": 8, "b": 0, "f": "-8*s^2-24*s+31", "g": "81*s^4+666*s^3+1531*s^2+666*s+81"},
    ],
    "expected_tuples": [[1, 1, 63, 139], [1, 2, 17, 37], [2, 1, 11, 35], [7, 1, 3, 23], [8, 1, 7, 55], [8, 2, 2, 17]],
    "expected_discriminants": [2903616, 153664, 235956, 87616, 367236, 20736],
    "expected_roots": {"2903616": 1704, "153664": 392, "87616": 296, "367236": 606, "20736": 144},
    "non_square": 235956,
    "expected_rejections": {
        "1,1,63,139": {"1": "negative-side", "-1": "width-below-m"},
        "1,2,17,37": {"1": "negative-side", "-1": "width-below-m"},
        "7,1,3,23": {"1": "negative-side", "-1": "width-below-m"},
        "8,1,7,55": {"1": "negative-side", "-1": "width-below-m"},
        "8,2,2,17": {"1": "negative-side", "-1": "width-below-m"},
    },
}

AN_CASE_II_TABLE = [
    [1, 2, 5, "(36*s^2+210*s+295)^2-w^2*(6*s^2+30*s+25)"],
    [1, 3, 4, "(40*s^2+230*s+319)^2-w^2*(10*s^2+50*s+49)"],
    [1, 4, 3, "(40*s^2+228*s+313)^2-w^2*(12*s^2+60*s+61)"],
    [1, 5, 2, "(36*s^2+204*s+277)^2-w^2*(12*s^2+60*s+61)"],
    [1, 6, 1, "(28*s^2+158*s+211)^2-w^2*(10*s^2+50*s+49)"],
    [1, 7, 0, "(16*s^2+90*s+115)^2-w^2*(6*s^2+30*s+25)"],
    [2, 1, 5, "(36*s^2+222*s+331)^2-w^2*(6*s^2+42*s+61)"],
    [2, 2, 4, "(45*s^2+270*s+394)^2-w^2*(15*s^2+90*s+124)"],
    [2, 3, 3, "(48*s^2+284*s+409)^2-w^2*(20*s^2+116*s+157)"],
    [2, 4, 2, "(45*s^2+264*s+376)^2-w^2*(21*s^2+120*s+160)"],
    [2, 5, 1, "(36*s^2+210*s+295)^2-w^2*(18*s^2+102*s+133)"],
    [2, 6, 0, "(21*s^2+122*s+166)^2-w^2*(11*s^2+62*s+76)"],
    [3, 1, 4, "(40*s^2+250*s+379)^2-w^2*(10*s^2+70*s+109)"],
    [3, 2, 3, "(48*s^2+292*s+433)^2-w^2*(20*s^2+124*s+181)"],
    [3, 3, 2, "(48*s^2+288*s+421)^2-w^2*(24*s^2+144*s+205)"],
    [3, 4, 1, "(2*s+7)^2*(20*s+49)^2-w^2*(22*s^2+130*s+181)"],
    [3, 5, 0, "(24*s^2+142*s+199)^2-w^2*(14*s^2+82*s+109)"],
    [4, 0, 4, "(25*s^2+170*s+274)^2+w^2*(5*s^2+10*s-4)"],
    [4, 1, 3, "(40*s^2+252*s+385)^2-w^2*(12*s^2+84*s+133)"],
    [4, 2, 2, "(45*s^2+276*s+412)^2-w^2*(21*s^2+132*s+196)"],
    [4, 3, 1, "(2*s+5)^2*(20*s+71)^2-w^2*(22*s^2+134*s+193)"],
    [4, 4, 0, "(25*s^2+150*s+214)^2-w^2*(15*s^2+90*s+124)"],
    [5, 0, 3, "(24*s^2+164*s+265)^2+w^2*(4*s^2+4*s-13)"],
    [5, 1, 2, "(36*s^2+228*s+349)^2-w^2*(12*s^2+84*s+133)"],
    [5, 2, 1, "(36*s^2+222*s+331)^2-w^2*(18*s^2+114*s+169)"],
    [5, 3, 0, "(24*s^2+146*s+211)^2-w^2*(14*s^2+86*s+121)"],
    [6, 0, 2, "(21*s^2+144*s+232)^2+w^2*(3*s^2-16)"],
    [6, 1, 1, "(28*s^2+178*s+271)^2-w^2*(10*s^2+70*s+109)"],
    [6, 2, 0, "(21*s^2+130*s+190)^2-w^2*(11*s^2+70*s+100)"],
    [7, 0, 1, "(2*s+5)^2*(8*s+35)^2+w^2*(2*s^2-2*s-13)"],
    [7, 1, 0, "(16*s^2+102*s+151)^2-w^2*(6*s^2+42*s+61)"],
    [8, 0, 0, "(9*s^2+62*s+94)^2+w^2*(s^2-2*s-4)"],
]

AN_CASE_II = {
    "s_range": [-2, 60],
    "w_range": [1, 2000],
    "table": [{"n": n, "a": a, "b": b, "equation": eq} for n, a, b, eq in AN_CASE_II_TABLE],
    "admissible_tuples": [
        [1, 2, 5, -1, 36, 121], [1, 2, 5, 0, 18, 59], [1, 3, 4, -1, 10, 43], [1, 3, 4, 8, 35, 143],
        [1, 6, 1, -1, 4, 27], [1, 6, 1, 8, 14, 99], [1, 7, 0, -1, 6, 41], [1, 7, 0, 0, 3, 23],
        [2, 1, 5, -2, 12, 31], [2, 1, 5, -1, 12, 29], [2, 1, 5, 19, 156, 319], [2, 2, 4, -2, 5, 17],
        [2, 4, 2, -2, 3, 14], [2, 5, 1, -2, 4, 19], [2, 6, 0, -1, 2, 13], [3, 1, 4, -2, 5, 13],
        [3, 4, 1, -2, 2, 9], [3, 5, 0, -2, 3, 11], [4, 0, 4, -2, 10, 17], [4, 0, 4, -1, 30, 43],
        [4, 0, 4, 0, 105, 137], [4, 2, 2, -2, 3, 10], [4, 3, 1, -1, 4, 17], [4, 4, 0, -2, 2, 7],
        [6, 1, 1, -2, 4, 9], [6, 2, 0, -2, 3, 7], [6, 2, 0, 0, 6, 19], [6, 2, 0, 30, 69, 209],
        [7, 1, 0, -2, 7, 11], [7, 1, 0, -1, 6, 13], [7, 1, 0, 19, 70, 143],
    ],
    "coordinate_tuples": [
        [1, 2, 5, -1, 36, 121, 996], [1, 2, 5, 0, 18, 59, 420], [1, 7, 0, -1, 6, 41, 264],
        [1, 7, 0, 0, 3, 23, 112], [2, 1, 5, -2, 12, 31, 204], [2, 1, 5, -1, 12, 29, 132],
        [2, 1, 5, 19, 156, 319, 1284], [2, 5, 1, -2, 4, 19, 156], [4, 0, 4, -2, 10, 17, 40],
        [4, 0, 4, -1, 30, 43, 90], [4, 0, 4, 0, 105, 137, 290], [4, 4, 0, -2, 2, 7, 20],
        [7, 1, 0, -2, 7, 11, 16], [7, 1, 0, -1, 6, 13, 8], [7, 1, 0, 19, 70, 143, 136],
    ],
    "rational_only_tuples": [
        [1, 3, 4, 8, 35, 143], [1, 6, 1, 8, 14, 99], [2, 1, 5, 19, 156, 319],
        [6, 2, 0, 30, 69, 209], [7, 1, 0, 19, 70, 143],
    ],
    "notes": "the recorded admissible list is reproduced as-is; five of its tuples have matrix solutions only over the rationals (x is not an integer), and thirteen further integral solutions of the printed table rows are absent from it -- both facts are reported in the certificate",
}

OPPOSITE_DU_VAL = {"w_max": 9, "n_max": 8, "v3_max": 40}


def main() -> None:
    FIX.mkdir(parents=True, exist_ok=True)
    for name, data in [
        ("a0_case_i.json", A0_CASE_I),
        ("an_case_i.json", AN_CASE_I),
        ("de_case.json", DE_CASE),
        ("a0_case_ii.json", A0_CASE_II),
        ("an_case_ii.json", AN_CASE_II),
        ("opposite_du_val.json", OPPOSITE_DU_VAL),
    ]:
        (FIX / name).write_text(json.dumps(data, indent=1, sort_keys=True))
        print("wrote", name)


if __name__ == "__main__":
    main()
