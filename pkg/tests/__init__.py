"""
Testes para o motor de ideais de monoides finitos
"""
