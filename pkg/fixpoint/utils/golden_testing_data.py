# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.


""" Golden data used in unit tests. """

from fixpoint.theorems.constants import ID_SRC, S1_SRC

BRANCH_SRC = b'i_(){ifeq(a,"0"){strcpy(c,"zero");}else{strcpy(c,"other");}}'

# Kernel programs together with (a, b) inputs and the expected Halted value.
kernel_run_data = [
    {"program": ID_SRC, "a": b"y", "b": b"", "expected": b"y"},
    {"program": S1_SRC, "a": b"y", "b": b"z", "expected": b"y"},
    {"program": b"p_(){strcpy(c,b);}", "a": b"y", "b": b"z", "expected": b"z"},
    {"program": b'e_(){strcpy(c,"q\\"\\\\");strcatq(c,c);}', "a": b"", "b": b"", "expected": b'q"\\q\\"\\\\'},
    {"program": b"f_(){strcatfn(c,a);}", "a": b"id_(){strcpy(c,a);}", "b": b"", "expected": b"id_"},
    {"program": b"f_(){strcatfn(c,a);}", "a": b"no paren", "b": b"", "expected": b"no paren"},
    {"program": b'm_(){g_();strcat(c,"!");}g_(){strcpy(c,a);}', "a": b"hi", "b": b"", "expected": b"hi!"},
    {"program": BRANCH_SRC, "a": b"0", "b": b"", "expected": b"zero"},
    {"program": BRANCH_SRC, "a": b"1", "b": b"", "expected": b"other"},
    # eval() runs a on b and only hands back c.
    {"program": b"u_(){eval();strcat(c,b);}", "a": ID_SRC, "b": b"w", "expected": b"ww"},
]

# A pretty text and its canonical form.
pretty_kernel_data = [
    {
        "pretty": b"id_ ( ) {\n    strcpy ( c , a ) ;  // copy\n}\n",
        "canonical": ID_SRC,
    },
    {
        "pretty": b'// a decider\nd_() {\n  ifeq(a, "") { strcpy(c, "0"); } else { strcpy(c, "1"); }\n}\n',
        "canonical": b'd_(){ifeq(a,""){strcpy(c,"0");}else{strcpy(c,"1");}}',
    },
    {
        "pretty": b'l_() { l_(); }   h_() { strcat(c, " spaced \\"lit\\" "); }',
        "canonical": b'l_(){l_();}h_(){strcat(c," spaced \\"lit\\" ");}',
    },
]

# Texts that must not parse, with a fragment of the expected message.
bad_kernel_data = [
    {"text": b"", "message": "empty program"},
    {"text": b"id_(){strcpy(c,a);", "message": "unbalanced braces"},
    {"text": b'x_(){strcpy(c,"abc);}', "message": "unterminated literal"},
    {"text": b'x_(){strcpy(c,"a\\nb");}', "message": "bad escape"},
    {"text": b"x_(){strcpy(d,a);}", "message": "unknown register"},
    {"text": b"x_(){}x_(){}", "message": "duplicate definition"},
    {"text": b"X_(){}", "message": "expected a name"},
    {"text": b"ab(){}", "message": "bad identifier"},
    {"text": b"x_(){ifeq(a,\"\"){}elsa{}}", "message": "expected 'else'"},
]

# Deciders for the Rice harness, with their expected verdict on any witness.
# The entry-name test looks at the leading bytes of its input text.
rice_decider_data = [
    {"name": "constant-0", "decider": b'd_(){strcpy(c,"0");}', "verdict": b"0", "contradiction": True},
    {"name": "constant-1", "decider": b'd_(){strcpy(c,"1");}', "verdict": b"1", "contradiction": True},
    {
        "name": "entry-name",
        "decider": b'd_(){strcpy(c,"");strcatfn(c,a);ifeq(c,"s_"){strcpy(c,"0");}else{strcpy(c,"1");}}',
        "verdict": b"0",
        "contradiction": True,
    },
]

# Member and non-member programs for the Rice harness.
rice_in_class = ID_SRC
rice_out_class = b't_(){strcpy(c,"zz");}'

# Script-makers for the uniform Rogers check and what "krx z" prints.
shell_maker_data = [
    {"name": b"mk", "content": b"echo echo hi!\n", "z": b"", "stdout": b"hi!\n"},
    {"name": b"mk", "content": b"echo echo $1\n", "z": b"", "stdout": b"krmk\n"},
    {"name": b"mk", "content": b"echo echo w \\$1\n", "z": b"id", "stdout": b"w id\n"},
]
