#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gsym {

struct group_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a generator list fails to generate the whole group.
struct non_generating_set : group_error {
    using group_error::group_error;
};

// A word over the group's distinguished generators. Entry k >= 0 means
// generator slot k; entry ~k (i.e. -k-1) means the inverse of slot k.
using gen_word = std::vector<int>;

// Small finite group given by an explicit multiplication table.
// Elements are indices in [0, order); index 0 is the identity.
class finite_group {
public:
    int order() const { return order_; }
    int identity() const { return 0; }

    int mul(int x, int y) const;
    int inv(int x) const;
    int element_order(int x) const;

    // Distinguished generator element indices (the ones the relations are
    // written over).
    const std::vector<int>& generators() const { return gens_; }
    const std::vector<gen_word>& relations() const { return relations_; }

    // Display label of an element ("e", "a^2 b", "x^3", ...).
    const std::string& label(int x) const;

    // Lookup of a named element ('a', 'b', 'c' for the modular-27 group;
    // 'x' for cyclic groups). Throws group_error if the name is unknown.
    int named(char name) const;

    // Evaluate a gen_word, optionally substituting images for the
    // generator slots.
    int eval_word(const gen_word& w, const std::vector<int>& slot_values) const;

    // The non-abelian group of order 27 with a^9 = b^3 = 1, b^-1 a b = a^4.
    // Element a^i b^j sits at index 3*i + j.
    static finite_group make_modular27();

    // Cyclic group of order n (n <= 64), generator 'x'.
    static finite_group make_cyclic(int n);

private:
    int order_ = 1;
    std::vector<int> mul_table_;   // order x order, row-major
    std::vector<int> inv_table_;
    std::vector<int> gens_;
    std::vector<gen_word> relations_;
    std::vector<std::string> labels_;
    std::vector<std::pair<char, int>> names_;

    void self_check() const;  // group axioms + relations; throws std::logic_error
    friend finite_group build_group(int order, std::vector<int> mul_table,
                                    std::vector<int> gens,
                                    std::vector<gen_word> relations,
                                    std::vector<std::string> labels,
                                    std::vector<std::pair<char, int>> names);
};

// An automorphism of a finite_group as a full element-index table.
struct group_automorphism {
    std::vector<int> mapping;

    bool operator==(const group_automorphism&) const = default;
};

// Sorted list of all elements reachable from gens by multiplication.
std::vector<int> generated_closure(const finite_group& g, const std::vector<int>& gens);

// All automorphisms of g, by brute force over images of gens: every tuple of
// candidate images that satisfies the defining relations and generates g
// extends (by closure) to a unique automorphism. gens must generate g.
std::vector<group_automorphism> enumerate_automorphisms(const finite_group& g,
                                                        const std::vector<int>& gens);

// Parse an element word over named generators, e.g. "Ba" = b^-1 a.
// Uppercase letters denote inverses; "e" or "" is the identity.
int parse_element(const finite_group& g, const std::string& word);

}  // namespace gsym
