"""
Complessi cubici, automa dei cammini normali e serie di crescita.
"""
