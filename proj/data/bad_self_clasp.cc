components 2
clasp a 1 1 +
clasp b 1 2 -
order 1 b
order 2
