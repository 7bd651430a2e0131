"""Correction terms of the prolongation connections, as literal tables.

``TABLE[i][j]`` is the coordinate ``j`` of ``Psi(e^i) v`` written as a linear
form in the coordinates ``w[n]`` of ``v``.  Both sides use the free-variable
coordinates of the Cartan component (see :mod:`pwkilling.tractor`), numbered
1-based as in the position bases.

Symbols: ``a1, a2`` (potential), ``g`` (rotation rate gamma), ``e`` (epsilon),
``A = a1 - a2`` and ``a = a1 = a2`` (conformally flat table only).

Tables are kept verbatim; departures are listed in
``CORRECTIONS`` and applied by :func:`pwkilling.prolongation.psi_table`.
"""

from __future__ import annotations

CONFORMAL: dict[int, dict[int, str]] = {
    1: {
        2: "A/30*w[11]",
        3: "-A/30*w[12]",
        5: "-A/60*(21*w[13]-2*w[17]+7*w[35]+2*g*w[63])",
        6: "A/10*(2*w[14]-g*(w[62]+w[68]))",
        7: "A/1260*(21*(34*w[15]+5*w[29]-3*w[36])+6*g*(15*w[56]-12*w[65]-22*w[69])+(36*g**2+194*a1-230*a2)*w[83])",
        8: "A/60*(23*w[13]+2*w[17]+5*w[35]-2*g*w[63])",
        9: "-A/1260*(21*(34*w[16]+5*w[30]-3*w[37])-6*g*(15*w[55]-22*w[64]+12*w[70])+(36*g**2-230*a1+194*a2)*w[87])",
        10: "A/2520*(1428*(2*w[28]+w[31]+w[38])+312*g*(2*w[71]-w[74])+3*(8*g**2-367*a1+359*a2)*w[84]-3*(8*g**2+359*a1-367*a2)*w[89])-(1531*A**2/1260)*w[107]",
        13: "A/24*(w[62]-w[68])",
        14: "-A/15*w[63]",
        15: "A/1680*(555*w[55]+509*w[64]-599*w[70]+44*g*w[87])",
        16: "A/1680*(-555*w[56]-599*w[65]-509*w[69]+44*g*w[83])",
        17: "-A/120*(5*w[62]+3*w[68])",
        18: "-A/30*w[63]",
        27: "A/168*(9*(-57*w[58]+36*w[71]-17*w[74])+8*g*(7*w[84]+10*w[89]+2*w[107]))",
        28: "A/5040*(3*(150*w[57]-511*w[61]-1136*w[72]+641*w[73]+1239*w[77])-12*g*(83*w[85]-157*w[88])-2*(60*g**2-101*a1+41*a2)*w[111])",
        29: "A/1680*(7*(-3*w[55]-9*w[64]+11*w[70])+4*g*w[87])",
        30: "A/1680*(7*(3*w[56]+11*w[65]+9*w[69])+4*g*w[83])",
        31: "A/168*(47*(w[61]-4*w[72]-w[73]+w[77])+22*g*(w[85]+w[88]))-(A**2/1008)*71*w[111]",
        32: "A/14*(9*(2*w[71]-w[74])-2*g*(w[84]-w[89]))",
        33: "-A/504*(12*(39*w[59]-47*(w[75]+w[79])-g*(22*w[90]+29*w[103]-27*w[109]))+(96*g**2+23*a1-119*a2)*w[112])",
        34: "-A/504*(12*(-39*w[60]+47*(w[76]-w[78])-g*(22*w[86]+29*w[99]-27*w[108]))-(96*g**2-119*a1+23*a2)*w[113])",
        35: "A/40*(w[62]-w[68])",
        36: "A/1680*(7*(9*w[55]+11*w[64]-17*w[70])-4*g*w[87])",
        37: "-A/1680*(7*(9*w[56]+17*w[65]+11*w[69])+4*g*w[83])",
        38: "A/840*(49*(-w[61]+4*w[72]+w[73]-w[77])-38*g*(w[85]+w[88]))+(71*A**2/5040)*w[111]",
        55: "A/30*w[83]",
        56: "-A/30*w[87]",
        57: "-19*A/420*(w[84]-w[89])",
        58: "A/84*(w[85]+w[88])",
        59: "A/28*(w[86]-11*w[108]+2*g*w[113])",
        60: "A/28*(-w[90]+11*w[109]+2*g*w[112])",
        61: "-A/20*(w[84]-w[89])",
        64: "53*A/840*w[83]",
        65: "-53*A/840*w[87]",
        69: "-53*A/840*w[87]",
        70: "-53*A/840*w[83]",
        71: "-A/84*(-5*w[85]+34*w[88]+g*w[111])",
        72: "-A/840*(67*w[84]-237*w[89]+90*w[107])",
        73: "23*A/84*(w[84]-w[89])",
        74: "-29*A/84*(w[85]+w[88])",
        75: "-A/84*(101*w[86]+28*w[99]-33*w[108]+20*g*w[113])",
        76: "-A/84*(-101*w[90]-28*w[103]+33*w[109]+20*g*w[112])",
        77: "-2*A/5*(w[84]-w[89])",
        78: "-A/6*(-8*w[90]+2*w[103]+5*w[109]+g*w[112])",
        79: "A/6*(8*w[86]-2*w[99]-5*w[108]+g*w[113])",
        80: "-A/6*(11*w[100]+7*w[105]+g*w[116])",
        81: "-A/2*(-3*(w[101]-w[104])+g*(w[115]+w[118]))",
        82: "-A/6*(-7*w[100]-11*w[105]+g*w[116])",
        84: "-A/12*w[111]",
        86: "A/12*w[112]",
        89: "A/12*w[111]",
        90: "(-(A/12))*w[113]",
        99: "(-(A/6))*w[112]",
        100: "(-(A/6))*(2*w[115]+w[118])",
        101: "(-(A/6))*w[116]",
        102: "(-(A/2))*w[117]",
        # entry 102 is printed twice with the same value
        103: "A/6*w[113]",
        104: "A/6*w[116]",
        105: "A/6*(w[115]+2*w[118])",
        106: "A/2*w[119]",
        108: "A/12*w[112]",
        109: "(-(A/12))*w[113]",
        110: "(-(A/12))*(w[115]-w[118])",
    },
    2: {
        5: "-19*A/60*w[11]",
        6: "-7*A/30*w[12]",
        7: "A/420*(-98*w[13]+7*(w[17]+11*w[35])+8*g*w[63])",
        8: "7*A/20*w[11]",
        9: "A/420*(7*(22*w[14]-5*w[18])-2*g*(w[62]-9*w[68]))",
        10: "A/2520*(84*(17*w[15]-5*w[29]-14*w[36])-24*g*(15*w[56]+w[65]+9*w[69])-(168*g**2-325*a1+157*a2)*w[83])",
        15: "A/1680*(579*w[62]+529*w[68])",
        16: "-11*A/840*w[63]",
        27: "A/210*(3*(49*w[56]-43*w[65])-127*w[69]-64*g*w[83])",
        28: "A/1680*(-363*w[55]+787*w[64]-785*w[70]-672*g*w[87])",
        29: "A/240*(w[62]-5*w[68])",
        30: "A/40*w[63]",
        31: "A/1680*(-513*w[55]+557*w[64]-495*w[70]+168*g*w[87])",
        32: "A/840*(267*w[56]-223*w[65]-261*w[69]+100*g*w[83])",
        33: "A/1680*(3*(570*w[57]-203*w[61]-248*w[72])-1141*w[73]-739*w[77]+24*g*(13*w[85]-7*w[88])+(280*g**2-69*a1-211*a2)*w[111])",
        34: "A/168*(15*w[58]-52*w[71]+23*w[74]+4*g*(25*w[84]+21*w[89]+52*w[107]))",
        36: "A/240*(17*w[62]+11*w[68])",
        37: "A/40*w[63]",
        38: "A/1680*(7*(-9*w[55]+17*w[64]-11*w[70])+80*g*w[87])",
        57: "A/84*w[83]",
        58: "-19*A/420*w[87]",
        59: "A/420*(-4*w[84]+19*w[89]+165*w[107])",
        60: "A/84*(-w[85]+2*w[88]+6*g*w[111])",
        61: "A/20*w[83]",
        71: "41*A/120*w[87]",
        72: "A/60*w[83]",
        73: "-2*A/5*w[83]",
        74: "29*A/84*w[87]",
        75: "A/840*(823*w[84]+577*w[89]+700*w[107])",
        76: "A/12*(-5*w[85]+7*w[88]+3*g*w[111])",
        77: "23*A/84*w[83]",
        78: "A/84*(-52*w[85]+77*w[88]+13*g*w[111])",
        79: "A/840*(437*w[84]+293*w[89]+330*w[107])",
        80: "(-(A/42))*(-25*w[86]-77*w[99]+16*w[108]+13*g*w[113])",
        81: "A/84*(3*(-12*w[90]+42*w[103])+23*w[109]+50*g*w[112])",
        82: "A/6*(-2*w[86]-7*w[99]+w[108]+3*g*w[113])",
        99: "A/6*w[111]",
        100: "5*A/12*w[112]",
        101: "A/4*w[113]",
        102: "(-(A/6))*(2*w[115]+w[118])",
        104: "A/6*w[113]",
        105: "-A/6*w[112]",
        108: "-A/12*w[111]",
        110: "A/12*w[112]",
    },
    3: {
        5: "(-(7*A/20))*w[12]",
        6: "7*A/30*w[11]",
        7: "A/420*(119*w[14]+35*w[18]+2*g*(9*w[62]-w[68]))",
        8: "19*A/60*w[12]",
        9: "A/420*(7*(15*w[13]+w[17]-12*w[35])+8*g*w[63])",
        10: "A/2520*(84*(-17*w[16]+5*w[30]+14*w[37])-24*g*(15*w[55]-9*w[64]-w[70])+(168*g**2+157*a1-325*a2)*w[87])",
        15: "11*A/840*w[63]",
        16: "(-(A/1680))*(529*w[62]+579*w[68])",
        27: "(-(A/840))*(321*w[55]-247*w[64]+293*w[70]+356*g*w[87])",
        28: "A/1680*(-939*w[56]+1357*w[65]+1463*w[69]+424*g*w[83])",
        29: "(-(A/40))*w[63]",
        30: "A/240*(5*w[62]-w[68])",
        31: "A/1680*(513*w[56]-495*w[65]-557*w[69]+168*g*w[83])",
        32: "(-(A/840))*(3*(-89*w[55]+87*w[64])-223*w[70]+100*g*w[87])",
        33: "A/168*(15*w[58]+52*w[71]-29*w[74]+4*g*(21*w[84]+25*w[89]+52*w[107]))",
        34: "A/1680*(3*(-570*w[57]+327*w[61]-248*w[72])+769*w[73]+1111*w[77]-24*g*(7*w[85]-13*w[88])-(280*g**2-211*a1-69*a2)*w[111])",
        36: "(-(A/40))*w[63]",
        37: "(-(A/240))*(11*w[62]+17*w[68])",
        38: "A/1680*(7*(9*w[56]-11*w[65]-17*w[69])+80*g*w[83])",
        57: "(-(A/84))*w[87]",
        58: "(-(19*A/420))*w[83]",
        59: "(-(A/84))*(-2*w[85]+w[88]+6*g*w[111])",
        60: "(-(A/420))*(19*w[84]-4*w[89]+165*w[107])",
        61: "(-(A/20))*w[87]",
        71: "A/280*w[83]",
        72: "(-(29*A/84))*w[87]",
        73: "2*A/5*w[87]",
        74: "29*A/84*w[83]",
        75: "A/12*(-7*w[85]+5*w[88]+3*g*w[111])",
        76: "A/840*(577*w[84]+823*w[89]+700*w[107])",
        77: "(-(23*A/84))*w[87]",
        78: "A/840*(293*w[84]+437*w[89]+330*w[107])",
        79: "(-(A/84))*(-77*w[85]+52*w[88]+13*g*w[111])",
        80: "A/6*(2*w[90]+7*w[103]-w[109]+3*g*w[112])",
        81: "A/84*(3*(13*w[86]-42*w[99])-23*w[108]+50*g*w[113])",
        82: "(-(A/42))*(25*w[90]+77*w[103]-16*w[109]+13*g*w[112])",
        100: "A/6*w[113]",
        101: "(-(A/6))*w[112]",
        103: "-A/6*w[111]",
        104: "-A/4*w[112]",
        105: "-5*A/12*w[113]",
        106: "A/6*(w[115]+2*w[118])",
        109: "A/12*w[111]",
        110: "-A/12*w[113]",
    },
    4: {
        7: "A/20*w[11]",
        9: "A/20*w[12]",
        10: "A/70*(7*(w[13]+2*w[17]-w[35])-4*g*w[63])",
        27: "(-(3*A/140))*w[63]",
        28: "(-(A/840))*(167*w[62]+149*w[68])",
        31: "3*A/140*(w[62]-w[68])",
        32: "(-(3*A/70))*w[63]",
        33: "A/840*(-129*w[55]+131*w[64]-185*w[70]+44*g*w[87])",
        34: "A/840*(129*w[56]-185*w[65]-131*w[69]+44*g*w[83])",
        59: "(-(3*A/140))*w[83]",
        60: "3*A/140*w[87]",
        75: "(-(197*A/840))*w[83]",
        76: "197*A/840*w[87]",
        78: "193*A/840*w[87]",
        79: "193*A/840*w[83]",
        80: "(-(A/420))*(197*w[84]+193*w[89]+230*w[107])",
        81: "A/84*(39*(-w[85]+w[88])+16*g*w[111])",
        82: "A/420*(193*w[84]+197*w[89]+230*w[107])",
        100: "A/12*w[111]",
        102: "(-(A/12))*w[112]",
        105: "(-(A/12))*w[111]",
        106: "A/12*w[113]",
    },
}

PROJECTIVE_FLAT: dict[int, dict[int, str]] = {
    1: {
        11: "-1/3*a*w[2]",
        12: "-1/3*a*w[3]",
        13: "2/3*a*w[4]",
        15: "1/3*a*w[7]",
        16: "1/3*a*w[9]",
        17: "1/6*a*(3*w[4]-w[5])",
        18: "-1/6*a*w[6]",
        19: "1/4*a*w[7]",
        20: "-1/4*a*w[9]",
        21: "-1/4*a*w[10]",
        24: "1/6*a*(3*w[4]-w[8])",
        25: "1/4*a*w[9]",
        26: "1/4*a*w[7]",
        28: "-1/4*a*w[10]",
        31: "1/3*a*w[10]",
        35: "-a*(e*(w[4]-(1/3)*w[5])-(3/2)*w[13]+w[17])",
        36: "1/6*a*(2*e*w[6]+3*w[14]-6*w[18])",
        37: "-1/12*a*(2*e*w[9]+21*w[16]-6*w[25])",
        38: "1/12*a*(2*e*w[9]-11*w[16]-4*w[20]-2*w[25])",
        39: "1/6*a*(e*w[10]-4*w[21]-w[31])",
        40: "-2/3*a*w[27]",
        41: "-a*(e*(w[4]-(1/3)*w[8])-(3/2)*w[13]+w[24])",
        42: "-1/12*a*(2*e*w[9]+21*w[16]-6*w[25])",
        43: "-1/12*a*(2*e*w[7]-11*w[15]-2*w[19]+4*w[26])",
        45: "1/6*a*(e*w[10]-4*w[28]-w[31])",
        46: "-2/3*a*(e*w[10]-3*w[31])",
        47: "2/3*a*w[32]",
        48: "a*w[33]",
        49: "a*w[34]",
        50: "2/3*a*(w[21]+w[28])",
        51: "1/3*a*w[34]",
        52: "-1/3*a*w[33]",
    },
    2: {
        11: "1/6*a*(3*w[4]-w[5])",
        12: "-1/6*w[6]*a",
        13: "1/12*a*w[7]",
        14: "-1/12*a*w[9]",
        15: "-1/12*a*w[10]",
        17: "a*w[7]",
        18: "1/3*a*w[9]",
        19: "1/3*a*w[10]",
        24: "1/4*a*w[7]",
        35: "-1/2*a*(4*e*w[7]+6*w[15]-9*w[19])",
        36: "-1/6*a*(4*e*w[9]+8*w[16]+w[20]-10*w[25])",
        37: "-1/12*a*(8*e*w[10]+7*w[21]-20*w[31])",
        38: "-3/4*a*(w[27]-3*w[32])",
        39: "3/2*a*w[33]",
        40: "a*w[34]",
        41: "-1/6*a*(4*e*w[7]+2*w[15]-7*w[19]+2*w[26])",
        42: "-1/12*a*(7*w[27]-5*w[32])",
        43: "1/12*a*(5*w[21]-4*w[28])",
        45: "1/6*a*w[33]",
        47: "-2/3*a*w[34]",
    },
    3: {
        11: "-1/6*a*w[6]",
        12: "1/6*a*(3*w[4]-w[8])",
        13: "1/12*a*w[9]",
        14: "1/12*a*w[7]",
        16: "-1/12*a*w[10]",
        17: "1/4*a*w[9]",
        18: "5/12*a*w[7]",
        24: "a*w[9]",
        25: "1/3*a*w[10]",
        35: "-1/6*a*(4*e*w[9]+2*w[16]-2*w[20]-7*w[25])",
        36: "-1/6*a*(4*e*w[7]+8*w[15]-10*w[19]-w[26])",
        37: "-1/12*a*(7*w[27]-2*w[32])",
        38: "1/12*a*(4*w[21]-5*w[28])",
        39: "1/6*a*w[34]",
        40: "1/3*a*w[33]",
        41: "-1/2*a*(4*e*w[9]+6*w[16]-9*w[25])",
        42: "-1/12*a*(8*e*w[10]+7*w[28]-20*w[31])",
        43: "3/4*a*(w[27]+2*w[32])",
        45: "3/2*a*w[34]",
        47: "2/3*a*w[33]",
    },
    4: {
        11: "1/12*a*w[7]",
        12: "1/12*a*w[9]",
        13: "1/3*a*w[10]",
        17: "1/4*a*w[10]",
        24: "1/4*a*w[10]",
        35: "-1/6*a*(4*e*w[10]+2*w[21]-7*w[31])",
        36: "-1/6*a*(2*w[27]-w[32])",
        37: "-3/4*a*w[33]",
        38: "-7/12*a*w[34]",
        41: "-1/6*a*(4*e*w[10]+2*w[28]-7*w[31])",
        42: "-3/4*a*w[34]",
        43: "7/12*a*w[33]",
    },
}

PROJECTIVE: dict[int, dict[int, str]] = {
    1: {
        11: "-1/3*(2*a1-a2)*w[2]",
        12: "1/3*(a1-2*a2)*w[3]",
        13: "1/3*(a1+a2)*w[4]",
        14: "1/3*(a1-a2)*w[6]",
        15: "1/3*a1*w[7]",
        16: "1/3*a2*w[9]",
        17: "1/6*a1*(3*w[4]-2*w[5])+(1/6)*a2*w[5]",
        18: "1/12*(a1-3*a2)*w[6]",
        19: "1/12*(a1+2*a2)*w[7]",
        20: "-1/4*a1*w[9]",
        21: "-1/4*a1*w[10]",
        24: "1/6*a2*(3*w[4]-2*w[8])+(1/6)*a1*w[8]",
        25: "1/12*(2*a1+a2)*w[9]",
        26: "1/4*a2*w[7]",
        28: "-1/4*a2*w[10]",
        31: "1/6*(a1+a2)*w[10]",
        35: "1/6*a1*(e*(-6*w[4]+4*w[5])-3*g*w[6]+9*w[13]-12*w[17])-(1/6)*a2*(2*e*w[5]-3*w[6]*g-6*w[17])",
        36: "1/4*(a1-a2)*g*(2*w[4]-w[5]-w[8])+(1/12)*a1*(2*e*w[6]-15*w[14]-6*w[18])+(1/12)*a2*(2*e*w[6]+21*w[14]-6*w[18])",
        37: "1/12*a1*(2*e*w[7]-3*g*w[9]-15*w[15]-6*w[19])-(1/12)*a2*(4*w[7]*e-3*w[9]*g+6*w[15]-12*w[19])",
        38: "1/12*a1*(2*e*w[9]+g*w[7]-11*w[16]-12*w[20]-2*w[25])-(1/12)*a2*(g*w[7]-8*w[20])",
        39: "1/6*a1*(e*w[10]-6*w[21]-w[31])+(1/3)*a2*w[21]",
        40: "1/12*a1*(-g*w[10]-8*w[27]+8*w[32])+(1/12)*a2*(g*w[10]-8*w[32])",
        41: "1/6*a2*(e*(-6*w[4]+4*w[8])+3*g*w[6]+9*w[13]-12*w[24])-(1/6)*a1*(3*g*w[6]+2*e*w[8]-6*w[24])",
        42: "1/12*a1*(-4*e*w[9]-3*g*w[7]-6*w[16]+12*w[25])+(1/12)*a2*(3*w[7]*g+2*e*w[9]-15*w[16]-6*w[25])",
        43: "1/12*(-2*e*w[7]+g*w[9]+11*w[15]+2*w[19]-12*w[26])*a2-(1/12)*a1*(g*w[9]-8*w[26])",
        45: "1/6*a2*(e*w[10]-6*w[28]-w[31])+(1/3)*a1*w[28]",
        46: "-1/3*(a1+a2)*(e*w[10]-3*w[31])",
        47: "2/3*(a1-a2)*w[27]+(2/3)*a2*w[32]",
        48: "1/3*(2*a1+a2)*w[33]",
        49: "1/3*(a1+2*a2)*w[34]",
        50: "2/3*a2*w[21]+(2/3)*a1*w[28]",
        51: "1/3*a1*w[34]",
        52: "-1/3*a2*w[33]",
    },
    2: {
        11: "1/6*a1*(3*w[4]-2*w[5])+(1/6)*a2*w[5]",
        12: "-1/12*(a1+a2)*w[6]",
        13: "-1/12*(a1-2*a2)*w[7]",
        14: "-1/12*a1*w[9]",
        15: "-1/12*a1*w[10]",
        17: "a1*w[7]",
        18: "1/3*a1*w[9]",
        19: "1/3*a1*w[10]",
        24: "1/4*a2*w[7]",
        35: "-1/2*a1*(4*e*w[7]+6*w[15]-9*w[19])",
        36: "1/12*a1*(-8*e*w[9]+8*g*w[7]-16*w[16]-9*w[20]+20*w[25])-(1/12)*a2*(8*w[7]*g-7*w[20])",
        37: "1/12*a1*(-8*e*w[10]-9*w[21]+20*w[31])+(1/6)*a2*w[21]",
        38: "-3/4*a1*(w[27]-3*w[32])",
        39: "3/2*a1*w[33]",
        40: "a1*w[34]",
        41: "1/6*a2*(-4*e*w[7]-4*g*w[9]-2*w[15]+7*w[19])+(1/3)*a1*(2*w[9]*g-w[26])",
        42: "1/12*a1*(4*g*w[10]-2*w[27]-2*w[32])-(1/12)*a2*(4*g*w[10]+5*w[27]-7*w[32])",
        43: "5/12*a2*w[21]-(1/3)*a1*w[28]",
        45: "1/6*a2*w[33]",
        46: "-1/3*(a1-a2)*w[33]",
        47: "-2/3*a1*w[34]",
    },
    3: {
        11: "-1/12*(a1+a2)*w[6]",
        12: "1/6*a2*(3*w[4]-2*w[8])+(1/6)*a1*w[8]",
        13: "1/12*(2*a1-a2)*w[9]",
        14: "1/12*a2*w[7]",
        16: "-1/12*a2*w[10]",
        17: "1/4*a1*w[9]",
        18: "5/12*a2*w[7]",
        24: "a2*w[9]",
        25: "1/3*a2*w[10]",
        35: "1/6*a1*(-4*e*w[9]+4*g*w[7]-2*w[16]+7*w[25])-(1/3)*a2*(2*w[7]*g-w[20])",
        36: "1/12*(-8*e*w[7]-8*g*w[9]-16*w[15]+20*w[19]+9*w[26])*a2+(1/12)*(8*w[9]*g-7*w[26])*a1",
        37: "1/12*a1*(4*g*w[10]-5*w[27]-2*w[32])-(1/6)*a2*(2*g*w[10]+w[27]-2*w[32])",
        38: "1/3*a2*w[21]-(5/12)*a1*w[28]",
        39: "1/6*a1*w[34]",
        40: "1/3*a2*w[33]",
        41: "-1/2*a2*(4*e*w[9]+6*w[16]-9*w[25])",
        42: "1/12*a2*(-8*e*w[10]-9*w[28]+20*w[31])+(1/6)*a1*w[28]",
        43: "3/4*a2*(w[27]+2*w[32])",
        45: "3/2*a2*w[34]",
        46: "1/3*(a1-a2)*w[34]",
        47: "2/3*a2*w[33]",
    },
    4: {
        11: "-1/12*(a1-2*a2)*w[7]",
        12: "1/12*(2*a1-a2)*w[9]",
        13: "1/6*(a1+a2)*w[10]",
        17: "1/4*a1*w[10]",
        24: "1/4*a2*w[10]",
        36: "1/12*a1*(4*g*w[10]-2*w[27]-5*w[32])-(1/12)*a2*(4*g*w[10]+2*w[27]-7*w[32])",
        37: "-1/12*(7*a1+2*a2)*w[33]",
        38: "-7/12*a1*w[34]",
        41: "1/6*a2*(-4*e*w[10]+7*w[31])-(1/3)*a1*w[28]",
        42: "-1/12*(2*a1+7*a2)*w[34]",
        43: "7/12*a2*w[33]",
    },
}
# (table, generator, coordinate) -> replacement expression.  Each entry is a
# misprint detected by a downstream consistency check; see the tests named in
# the comments.
CORRECTIONS: dict[tuple[str, int, int], str] = {
    # verbatim copy of entry 42 in the table; the general table at a1 = a2
    # gives this form (test_flat_table_matches_general_specialisation)
    ("projective_flat", 1, 37): "-1/12*a*(2*e*w[7]+21*w[15]-6*w[19])",
    # sign fixed by the x2 <-> x3 swap symmetry against entry (4, 9)
    # (test_psi_swap_equivariance)
    ("conformal", 4, 7): "-A/20*w[11]",
    # entries below fail the Kostant codifferential normalisation
    # (test_psi_normalisation); each was isolated by a sparse residual solve
    # and re-checked against the swap and reflection symmetries
    # sign of the A-linear part
    ("conformal", 1, 31): "-A/168*(47*(w[61]-4*w[72]-w[73]+w[77])+22*g*(w[85]+w[88]))-(A**2/1008)*71*w[111]",
    # prefactor 3, not 9
    ("conformal", 1, 27): "A/168*(3*(-57*w[58]+36*w[71]-17*w[74])+8*g*(7*w[84]+10*w[89]+2*w[107]))",
    # overall sign
    ("conformal", 2, 75): "-A/840*(823*w[84]+577*w[89]+700*w[107])",
    # overall sign
    ("conformal", 2, 60): "-A/84*(-w[85]+2*w[88]+6*g*w[111])",
    # coefficient of w[90] is -13, not -12
    ("conformal", 2, 81): "A/84*(3*(-13*w[90]+42*w[103])+23*w[109]+50*g*w[112])",
    # sign of w[69]
    ("conformal", 2, 10): "A/2520*(84*(17*w[15]-5*w[29]-14*w[36])-24*g*(15*w[56]+w[65]-9*w[69])-(168*g**2-325*a1+157*a2)*w[83])",
    # missing entry; swap partner of (4, 41), reduces to the flat table at
    # a1 = a2
    ("projective", 4, 35): "1/6*a1*(-4*e*w[10]+7*w[31])-1/3*a2*w[21]",
}
