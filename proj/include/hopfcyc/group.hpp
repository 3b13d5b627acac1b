#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hopfcyc {

class GroupError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Finite group by multiplication table; elements are 0..order-1.
class FiniteGroup {
public:
    // table[a][b] = a·b. Throws GroupError unless the table defines a group.
    static FiniteGroup from_table(std::string name, std::vector<std::string> names, std::vector<std::vector<int>> table);
    // Built-ins: trivial, C2, C3, C4, S3, Q8.
    static FiniteGroup builtin(const std::string& name);
    static std::vector<std::string> builtin_names();

    const std::string& name() const { return name_; }
    int order() const { return static_cast<int>(table_.size()); }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    int identity() const { return id_; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g⁻¹
    const std::string& element_name(int a) const { return names_[static_cast<std::size_t>(a)]; }
    const std::vector<std::string>& element_names() const { return names_; }
    const std::vector<std::vector<int>>& table() const { return table_; }
    int index_of(const std::string& element) const;

    // Sorted element list of the subgroup generated by gens.
    std::vector<int> generated(const std::vector<int>& gens) const;
    bool is_subgroup(const std::vector<int>& elems) const;
    bool is_normal(const std::vector<int>& subgroup) const;
    // Conjugacy classes, each sorted, ordered by smallest element.
    std::vector<std::vector<int>> conjugacy_classes() const;
    std::vector<int> class_index() const;

private:
    std::string name_;
    std::vector<std::string> names_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    int id_ = 0;
};

// Parses a comma-separated list of element names such as "(12)" or "i,j".
std::vector<int> parse_elements(const FiniteGroup& g, const std::string& text);

}  // namespace hopfcyc
