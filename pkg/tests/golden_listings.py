"""Frozen golden fragments the renderers must reproduce byte-for-byte.

Manually broken lines in the source material (trailing backslash + wrapped
continuation) are joined back into single lines here, and the one listing
typeset at 2-space indent is normalized to the project-wide 4-space rule.
Method-level fragments are standalone: one closing brace, no class context.
"""

FOREACH_FIRST_LINE = {
    "python": "for age in ages:",
    "java": "for (int age : ages) {",
    "csharp": "foreach (int age in ages) {",
    "cpp": "for (std::vector<int>::iterator age = ages.begin(); age != ages.end(); age++) {",
}

SINE_EXPR = {
    "python": "math.sin(foo)",
    "java": "Math.sin(foo)",
    "csharp": "Math.Sin(foo)",
    "cpp": "sin(foo)",
}

ARG_AT_PYTHON = "sys.argv[1]"

SLICE_PYTHON = "someAges = ages[1:3:]"

SLICE_JAVA = """\
ArrayList<Double> temp = new ArrayList<Double>(0);
for (int i_temp = 1; i_temp < 3; i_temp++) {
    temp.add(ages.get(i_temp));
}
someAges = temp;"""

LIST_PRINT_CPP = """\
std::cout << "[";
for (int list_i1 = 0; list_i1 < (int)(myName.size()) - 1; list_i1++) {
    std::cout << myName.at(list_i1);
    std::cout << ", ";
}
if ((int)(myName.size()) > 0) {
    std::cout << myName.at((int)(myName.size()) - 1);
}
std::cout << "]" << std::endl;"""

APPLY_DISCOUNT = {
    "python": """\
def applyDiscount(price, discount):
    price = price - discount
    isAffordable = price < 20

    return price, isAffordable""",
    "java": """\
public static Object[] applyDiscount(int price, int discount) throws Exception {
    Boolean isAffordable;

    price = price - discount;
    isAffordable = price < 20;

    Object[] outputs = new Object[2];
    outputs[0] = price;
    outputs[1] = isAffordable;
    return outputs;
}""",
    "csharp": """\
public static void applyDiscount(ref int price, int discount, out Boolean isAffordable) {
    price = price - discount;
    isAffordable = price < 20;
}""",
    "cpp": """\
void applyDiscount(int &price, int discount, bool &isAffordable) {
    price = price - discount;
    isAffordable = price < 20;
}""",
}

SET_FOO = {
    "python": """\
def setFoo(self, foo):
    self.foo = foo""",
    "java": """\
public void setFoo(int foo) throws Exception {
    this.foo = foo;
}""",
    "csharp": """\
public void setFoo(int foo) {
    this.foo = foo;
}""",
    "cpp": """\
void FooClass::setFoo(int foo) {
    this->foo = foo;
}""",
}

ADD_RETURN_LINE = {
    "python": "return num1 + num2",
    "java": "return num1 + num2;",
    "csharp": "return num1 + num2;",
    "cpp": "return num1 + num2;",
}
