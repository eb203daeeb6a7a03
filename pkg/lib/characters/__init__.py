from lib.characters.ConjugacyClass import ConjugacyClass
from lib.characters.murnaghan_nakayama import chi, chi_transposition, eta, gamma, gamma3_closed_form
from lib.characters.CharacterTable import CharacterTable, character_table
