# Borromean rings: four-clasp C-complex.
# Words: w1 = x3^-1 x2 x3 x2^-1, w2 = x1^-1 x1, w3 = x1^-1 x1.
components 3
clasp p 1 2 +
clasp q 1 2 -
clasp r 1 3 +
clasp s 1 3 -
order 1 s p r q
order 2 q p
order 3 s r
