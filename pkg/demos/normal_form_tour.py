"""Tour: braid words modulo the center and their canonical forms.

Run with: python3 demos/normal_form_tour.py
"""

from braidcount import (
    evaluate,
    normal_form,
    parse_braid,
    pure_projection,
    remultiply,
    word_to_text,
)


def show(text: str) -> None:
    x = evaluate(parse_braid(text))
    form = normal_form(x)
    print(f"  {text!r:24} -> coset {str(x):16} form {form}")
    assert remultiply(form) == x


print("Every braid word lands on one canonical form sigma_j^k b1 D^ell:")
for text in ("", "D", "s1", "s1^2 s2^2", "s1 s2", "S2 S1 S2", "s1^5 s2^-3 s1"):
    show(text)

print()
print("The two spellings of the braid relation agree:")
left = evaluate(parse_braid("s1 s2 s1"))
right = evaluate(parse_braid("s2 s1 s2"))
print(f"  s1 s2 s1 == s2 s1 s2: {left == right}")

print()
print("The projection map drops the half-twist part and keeps a pure word:")
for text in ("s1^2 s2^2", "s1^3 s2^2", "s1 s2^2"):
    form = normal_form(evaluate(parse_braid(text)))
    theta = pure_projection(form)
    print(f"  theta({text!r}) = {word_to_text(theta)!r}")

print()
print("Multiplying by the half twist never changes the projection:")
x = evaluate(parse_braid("s1^3 s2^2"))
from braidcount import HALF_TWIST

before = pure_projection(normal_form(x))
after = pure_projection(normal_form(x * HALF_TWIST))
print(f"  theta(x) == theta(x*D): {before == after}")
