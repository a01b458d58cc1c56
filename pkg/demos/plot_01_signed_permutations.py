"""
Signed permutations and the extended alcove
===========================================

Elements of the Iwahori-Weyl group are pairs (translation, signed
permutation).  Each one determines a chain of lattice points in the
embedded 2n-dimensional space, and the chain determines the element back.
"""

from alcove_lab import IWElement, SignedPerm, translation
from alcove_lab.iwahori_weyl import embed_gl, mu_vectors, nu_vectors, to_extended_alcove, from_extended_alcove

# window (2, -1, 3) sends e1 -> e2, e2 -> -e1, e3 -> e3
s = SignedPerm((2, -1, 3))
print("window", s.window, "as letters on 1..6:", s.letters())
print("act on (5, 7, 9):", s.act((5, 7, 9)), " even?", s.is_even())

w = translation((1, 0, 0)) * IWElement.linear(s)
print("\nw =", w)
print("inside GL_6:", embed_gl(w))

alc = to_extended_alcove(w)
for k in range(6):
    print(f"  v_{k} = {alc.v(k)}")
print("round trip recovers w:", from_extended_alcove(alc) == w)

# mu_k = v_k - omega_k records how far each vertex moved
for k, mu in enumerate(mu_vectors(w)):
    print(f"  mu_{k} = {mu}")
print("nu_k:", [tuple(str(c) for c in nu) for nu in nu_vectors(w)])
