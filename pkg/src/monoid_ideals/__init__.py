# Motor de ideais para monoides comutativos finitos pontuados
