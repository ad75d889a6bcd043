#include "freegp/word.hpp"

#include "freegp/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <utility>

namespace freegp {

Variable Variable::parse(std::string_view text)
{
	std::size_t i = 0;
	while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])))
		++i;
	if (i == 0 || i == text.size())
		throw DomainError("invalid variable name '" + std::string(text) + "'");
	std::uint64_t index = 0;
	for (std::size_t j = i; j < text.size(); ++j) {
		if (!std::isdigit(static_cast<unsigned char>(text[j])))
			throw DomainError("invalid variable name '" + std::string(text) + "'");
		index = index * 10 + static_cast<unsigned>(text[j] - '0');
		if (index > 0xffffffffu)
			throw DomainError("variable index too large in '" + std::string(text) + "'");
	}
	return Variable(std::string(text.substr(0, i)), static_cast<std::uint32_t>(index));
}

namespace detail {

struct WordNode {
	Variable var;
	const WordNode* left = nullptr;
	const WordNode* right = nullptr;
	unsigned degree = 1;
	std::size_t hash = 0;
	std::vector<Variable> content;
};

namespace {

struct PairHash {
	std::size_t operator()(const std::pair<const WordNode*, const WordNode*>& p) const noexcept
	{
		return p.first->hash * 0x9e3779b97f4a7c15ull ^ (p.second->hash + 0x7f4a7c159e3779b9ull + (p.first->hash << 6));
	}
};

class Interner {
public:
	const WordNode* leaf(const Variable& v)
	{
		std::lock_guard lock(mutex_);
		auto it = leaves_.find(v);
		if (it != leaves_.end())
			return it->second;
		WordNode& n = storage_.emplace_back();
		n.var = v;
		n.hash = std::hash<Variable>{}(v);
		n.content = {v};
		leaves_.emplace(v, &n);
		return &n;
	}

	const WordNode* bracket(const WordNode* l, const WordNode* r)
	{
		std::lock_guard lock(mutex_);
		auto key = std::make_pair(l, r);
		auto it = brackets_.find(key);
		if (it != brackets_.end())
			return it->second;
		WordNode& n = storage_.emplace_back();
		n.left = l;
		n.right = r;
		n.degree = l->degree + r->degree;
		n.hash = PairHash{}(key);
		n.content.reserve(n.degree);
		std::merge(l->content.begin(), l->content.end(), r->content.begin(), r->content.end(),
		           std::back_inserter(n.content));
		brackets_.emplace(key, &n);
		return &n;
	}

private:
	std::mutex mutex_;
	std::deque<WordNode> storage_;
	std::unordered_map<Variable, const WordNode*> leaves_;
	std::unordered_map<std::pair<const WordNode*, const WordNode*>, const WordNode*, PairHash> brackets_;
};

Interner& interner()
{
	static Interner instance;
	return instance;
}

std::strong_ordering compare(const WordNode* a, const WordNode* b) noexcept
{
	if (a == b)
		return std::strong_ordering::equal;
	if (a->degree != b->degree)
		return a->degree <=> b->degree;
	if (!a->left) // both leaves
		return a->var <=> b->var;
	if (auto c = compare(a->left, b->left); c != 0)
		return c;
	return compare(a->right, b->right);
}

void print(const WordNode* n, std::string& out)
{
	if (!n->left) {
		out += n->var.str();
		return;
	}
	out += '{';
	print(n->left, out);
	out += ',';
	print(n->right, out);
	out += '}';
}

} // namespace
} // namespace detail

Word Word::leaf(const Variable& v) { return Word(detail::interner().leaf(v)); }

Word Word::bracket(Word l, Word r) { return Word(detail::interner().bracket(l.node_, r.node_)); }

bool Word::is_leaf() const noexcept { return node_->left == nullptr; }

const Variable& Word::variable() const
{
	if (!is_leaf())
		throw DomainError("word " + str() + " is not a variable");
	return node_->var;
}

Word Word::left() const
{
	if (is_leaf())
		throw DomainError("variable has no subwords");
	return Word(node_->left);
}

Word Word::right() const
{
	if (is_leaf())
		throw DomainError("variable has no subwords");
	return Word(node_->right);
}

unsigned Word::degree() const noexcept { return node_->degree; }

std::span<const Variable> Word::content() const noexcept { return node_->content; }

unsigned Word::count(const Variable& v) const noexcept
{
	auto [lo, hi] = std::equal_range(node_->content.begin(), node_->content.end(), v);
	return static_cast<unsigned>(hi - lo);
}

std::string Word::str() const
{
	std::string out;
	detail::print(node_, out);
	return out;
}

std::size_t Word::hash() const noexcept { return node_->hash; }

std::strong_ordering operator<=>(Word a, Word b) noexcept { return detail::compare(a.node_, b.node_); }

} // namespace freegp
