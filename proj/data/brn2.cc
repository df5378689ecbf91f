components 3
clasp p1 1 2 +
clasp p2 1 2 +
clasp q1 1 2 -
clasp q2 1 2 -
clasp r1 1 3 +
clasp r2 1 3 +
clasp s1 1 3 -
clasp s2 1 3 -
order 1 s1 s2 p1 p2 r1 r2 q1 q2
order 2 p1 p2 q1 q2
order 3 r1 s1 r2 s2
