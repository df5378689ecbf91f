# Two-component link with linking number 1 bounding a three-clasp C-complex.
components 2
clasp a 1 2 +
clasp b 1 2 +
clasp c 1 2 -
order 1 a b c
order 2 c a b
