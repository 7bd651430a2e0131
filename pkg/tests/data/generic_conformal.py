"""Generic 27-dimensional conformal solution space: free variables and
dependent-variable expressions in the position coordinates, as a
parameter-dependent oracle for the solver."""
FREE = [77,78,79,80,81,82,86,89,90,100,101,102,104,105,106,108,109,110,111,112,113,115,116,117,118,119,120]
DEP = {
10: "1/84*(23*a1**2+38*a1*a2+23*a2**2)*w[111]",
27: "-1/84*(19*a1+9*a2)*g*w[111]",
28: "1/21*(4*a1+17*a2)*w[89]",
31: "-1/2*(a1+a2)*w[89]",
32: "-1/3*g*(a1+a2)*w[111]",
33: "1/84*a1*(465*w[86]-355*w[108]+202*g*w[113])+1/84*a2*(291*w[86]-233*w[108]+134*g*w[113])",
34: "1/84*a1*(291*w[90]-233*w[109]-134*g*w[112])-1/84*a2*(-465*w[90]+355*w[109]+202*g*w[112])",
38: "-1/2*(a1+a2)*w[89]",
57: "-10/3*w[77]+1/6*(12*g**2-a1-a2)*w[111]",
58: "4/3*g*w[89]",
59: "-8/3*w[79]+1/18*g*(-324*w[90]+252*w[109])+1/18*(144*g**2-a1-5*a2)*w[112]",
60: "8/3*w[78]+1/18*g*(324*w[86]-252*w[108])+1/18*(144*g**2-5*a1-a2)*w[113]",
61: "-7/2*w[77]+1/2*(4*g**2-a1-a2)*w[111]",
71: "2/3*g*w[89]",
72: "1/4*w[77]+1/24*(a1-a2)*w[111]",
73: "-7/2*w[77]+1/2*(4*g**2-a1-a2)*w[111]",
74: "4/3*g*w[89]",
75: "-3*w[79]+1/3*g*(-54*w[90]+42*w[109])+1/3*(24*g**2-a1-2*a2)*w[112]",
76: "3*w[78]+1/3*g*(54*w[86]-42*w[108])+1/3*(24*g**2-2*a1-a2)*w[113]",
84: "w[89]",
85: "1/3*g*w[111]",
88: "-1/3*g*w[111]",
99: "4*w[86]-3*w[108]+2*g*w[113]",
103: "4*w[90]-3*w[109]-2*g*w[112]",
107: "-w[89]",
}
