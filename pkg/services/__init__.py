from .words import Word, canonical, format_word, parse_word
from .permutation import MultiIndexPermutation
from .mealy import SemiMealyMachine
from .branching import BranchingLaw, BranchingService, Component, branch
from .bfs_oracle import SymbolicBFS, SymbolicPoint, compare
